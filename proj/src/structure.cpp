#include "parking/structure.hpp"

#include <stdexcept>
#include <string>

namespace parking {

NotHamiltonianPath::NotHamiltonianPath(const Permutation& perm)
    : std::invalid_argument("outcome " + format_word(perm.word()) +
                            " is not a Hamiltonian path of the graph") {}

bool is_hamiltonian_path(const Permutation& perm, const FriendshipGraph& g) {
  if (perm.size() != g.size()) return false;
  for (int k = 1; k < perm.size(); ++k) {
    if (!g.adjacent(perm(k), perm(k + 1))) return false;
  }
  return true;
}

namespace {

// Returns true from `emit` to stop the search.
template <class Emit>
bool extend_paths(const FriendshipGraph& g, std::vector<int>& path, std::vector<bool>& used, Emit& emit) {
  if (static_cast<int>(path.size()) == g.size()) return emit(path);
  for (int next : g.neighbours(path.back())) {
    if (used[next]) continue;
    used[next] = true;
    path.push_back(next);
    const bool stop = extend_paths(g, path, used, emit);
    path.pop_back();
    used[next] = false;
    if (stop) return true;
  }
  return false;
}

template <class Emit>
void search_paths(const FriendshipGraph& g, Emit emit) {
  const int n = g.size();
  std::vector<int> path;
  path.reserve(n);
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (int start = 1; start <= n; ++start) {
    used[start] = true;
    path.push_back(start);
    const bool stop = extend_paths(g, path, used, emit);
    path.pop_back();
    used[start] = false;
    if (stop) return;
  }
}

}  // namespace

std::vector<Permutation> hamiltonian_paths(const FriendshipGraph& g) {
  std::vector<Permutation> out;
  search_paths(g, [&](const std::vector<int>& path) {
    out.emplace_back(path);
    return false;
  });
  return out;
}

bool has_hamiltonian_path(const FriendshipGraph& g) {
  bool found = false;
  search_paths(g, [&](const std::vector<int>&) { return found = true; });
  return found;
}

bool is_blocker(int j, int i, const Permutation& perm, const FriendshipGraph& g) {
  if (j <= i) return true;
  const int k = perm.position_of(j);
  for (int side : {k - 1, k + 1}) {
    if (side < 1 || side > perm.size()) continue;
    const int l = perm(side);
    if (l < i && !g.adjacent(l, i)) return true;
  }
  return false;
}

std::vector<int> BlockingSequence::elements() const {
  std::vector<int> out;
  for (int k = first_position; k <= last_position; ++k) out.push_back(host(k));
  return out;
}

BlockingSequence blocking_sequence(int i, const Permutation& perm, const FriendshipGraph& g) {
  const int last = perm.position_of(i);
  int first = last;
  while (first > 1 && is_blocker(perm(first - 1), i, perm, g)) --first;
  return BlockingSequence{perm, i, first, last};
}

FibreCharacterisation fibre_characterisation(const Permutation& perm, const FriendshipGraph& g) {
  if (!is_hamiltonian_path(perm, g)) throw NotHamiltonianPath(perm);
  FibreCharacterisation fc{perm, {}};
  fc.spot_sets.reserve(perm.size());
  for (int i = 1; i <= perm.size(); ++i) {
    const auto b = blocking_sequence(i, perm, g);
    fc.spot_sets.push_back({b.first_position, b.last_position});
  }
  return fc;
}

Count fibre_size(const Permutation& perm, const FriendshipGraph& g) {
  Count size = 1;
  for (const auto& s : fibre_characterisation(perm, g).spot_sets) size = checked_mul(size, s.size());
  return size;
}

std::vector<ParkingPreference> enumerate_fibre(const Permutation& perm, const FriendshipGraph& g) {
  const auto fc = fibre_characterisation(perm, g);
  const int n = perm.size();
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[i] = fc.spot_sets[i].lo;
  std::vector<ParkingPreference> out;
  while (true) {
    out.emplace_back(p);
    int k = n - 1;
    for (; k >= 0; --k) {
      if (p[k] < fc.spot_sets[k].hi) {
        ++p[k];
        break;
      }
      p[k] = fc.spot_sets[k].lo;
    }
    if (k < 0) break;
  }
  return out;
}

Count total_fpf_count(const FriendshipGraph& g) {
  Count total = 0;
  for (const auto& perm : hamiltonian_paths(g)) total = checked_add(total, fibre_size(perm, g));
  return total;
}

}  // namespace parking
