#include "moduli/groups.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

namespace moduli {

namespace {

std::size_t factorial(std::size_t m) {
  std::size_t f = 1;
  for (std::size_t i = 2; i <= m; ++i) f *= i;
  return f;
}

Perm product(const std::vector<Perm>& ps, std::size_t count, std::size_t degree) {
  Perm r = Perm::identity(degree);
  for (std::size_t i = 0; i < count; ++i) r = r * ps[i];
  return r;
}

GenVector conjugate(const GenVector& v, const Perm& g) {
  GenVector out{v.signature, {}};
  out.entries.reserve(v.entries.size());
  for (const auto& p : v.entries) out.entries.push_back(p.conjugate_by(g));
  return out;
}

GenVector least_conjugate(const GenVector& v, const std::vector<Perm>& acting) {
  GenVector best = v;
  for (const auto& g : acting) {
    GenVector c = conjugate(v, g);
    if (c < best) best = std::move(c);
  }
  return best;
}

std::vector<Perm> centralizer(const std::vector<Perm>& fixed, std::size_t degree) {
  std::vector<Perm> out;
  for (const auto& g : symmetric_group(degree)) {
    bool ok = true;
    for (const auto& f : fixed) ok = ok && g * f == f * g;
    if (ok) out.push_back(g);
  }
  return out;
}

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace

std::vector<std::string> gen_vector_problems(const GenVector& v, std::size_t degree) {
  std::vector<std::string> problems;
  const auto& orders = v.signature.orders();
  if (v.entries.size() != orders.size()) {
    problems.push_back("entry count does not match the signature");
    return problems;
  }
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (v.entries[i].degree() != degree) {
      problems.push_back("entry " + std::to_string(i + 1) + " has the wrong degree");
      return problems;
    }
    if (v.entries[i].order() != orders[i])
      problems.push_back("entry " + std::to_string(i + 1) + " has order " + std::to_string(v.entries[i].order()) +
                         ", expected " + std::to_string(orders[i]));
  }
  if (!product(v.entries, v.entries.size(), degree).is_identity()) problems.push_back("product is not the identity");
  if (generated_subgroup(v.entries, degree).size() != factorial(degree))
    problems.push_back("entries do not generate the symmetric group");
  return problems;
}

GenVector canonical_form(const GenVector& v) {
  if (v.entries.empty()) return v;
  return least_conjugate(v, symmetric_group(v.entries.front().degree()));
}

Census enumerate_smooth_epis(const Signature& sig, std::size_t degree, const CensusOptions& options) {
  if (sig.genus() != 0) throw std::invalid_argument("only genus-0 signatures are enumerated");
  if (sig.cone_points() < 3) throw std::invalid_argument("the census needs at least three cone points");
  if (degree < 1 || degree > 5) throw std::invalid_argument("target symmetric group degree must be between 1 and 5");

  const auto& orders = sig.orders();
  const std::size_t n = orders.size();
  const auto group = symmetric_group(degree);
  const std::size_t group_order = group.size();

  std::vector<std::vector<Perm>> candidates(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& g : group)
      if (g.order() == orders[i]) candidates[i].push_back(g);
  }
  std::vector<Perm> pinned_values;
  if (options.normalization) {
    for (const auto& [index, p] : options.normalization->pinned) {
      if (index >= n) throw std::invalid_argument("pinned entry index outside the signature");
      if (p.degree() != degree) throw std::invalid_argument("pinned entry has the wrong degree");
      candidates[index].clear();
      if (p.order() == orders[index]) candidates[index].push_back(p);
      pinned_values.push_back(p);
    }
  }
  const std::vector<Perm> acting =
      options.normalization ? centralizer(pinned_values, degree) : group;

  Census census;
  census.acting_group_order = acting.size();
  for (const auto& c : candidates)
    if (c.empty()) return census;

  std::mutex merge_mutex;
  std::set<GenVector> classes;
  std::size_t total = 0;

  auto worker = [&](std::size_t first_index, std::size_t stride) {
    std::set<GenVector> local;
    std::size_t local_total = 0;
    std::vector<Perm> tuple(n);
    // Fills entries [k, n-1) recursively; entry n-1 closes the product.
    auto recurse = [&](auto&& self, std::size_t k, const Perm& prefix) -> void {
      if (k == n - 1) {
        Perm last = prefix.inverse();
        if (last.order() != orders[n - 1]) return;
        if (candidates[n - 1].size() == 1 && options.normalization &&
            options.normalization->pinned.count(n - 1) != 0 && last != candidates[n - 1].front())
          return;
        tuple[n - 1] = std::move(last);
        if (generated_subgroup(tuple, degree).size() != group_order) return;
        ++local_total;
        local.insert(least_conjugate(GenVector{sig, tuple}, acting));
        return;
      }
      for (const auto& p : candidates[k]) {
        tuple[k] = p;
        self(self, k + 1, prefix * p);
      }
    };
    for (std::size_t i = first_index; i < candidates[0].size(); i += stride) {
      tuple[0] = candidates[0][i];
      recurse(recurse, 1, candidates[0][i]);
    }
    std::lock_guard<std::mutex> lock(merge_mutex);
    total += local_total;
    classes.insert(local.begin(), local.end());
  };

  const unsigned threads =
      std::min<unsigned>(resolve_threads(options.threads), static_cast<unsigned>(candidates[0].size()));
  if (threads <= 1) {
    worker(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t, threads);
    for (auto& th : pool) th.join();
  }

  census.vectors = total;
  census.classes.assign(classes.begin(), classes.end());
  return census;
}

std::pair<Perm, Perm> s4_standard_generators() {
  return {Perm::from_cycles(4, {{1, 2, 3, 4}}), Perm::from_cycles(4, {{3, 4}})};
}

Normalization kft_normalization() {
  const auto [A, B] = s4_standard_generators();
  Normalization n;
  n.pinned.emplace(2, A * A);
  n.pinned.emplace(3, B * A);
  return n;
}

std::vector<std::pair<std::string, Perm>> s4_word_labels() {
  const auto [A, B] = s4_standard_generators();
  const std::map<std::string, Perm> gens{{"A", A}, {"B", B}};
  std::vector<std::pair<std::string, Perm>> out;
  for (const char* w : {"B", "ABA^-1", "(BA)B(BA)^-1", "A^2BA^2", "A^-1BA", "A^2", "A", "A^-1", "BA", "(BA)^-1"})
    out.emplace_back(w, perm_word_eval(parse_word(w), gens, 4));
  return out;
}

std::string label_perm(const Perm& p, const std::vector<std::pair<std::string, Perm>>& labels) {
  for (const auto& [name, q] : labels)
    if (q == p) return name;
  return to_string(p);
}

const char* to_string(Move m) {
  switch (m) {
    case Move::Y: return "Y";
    case Move::Z: return "Z";
    case Move::W: return "W";
  }
  return "?";
}

std::optional<Move> parse_move(const std::string& name) {
  if (name == "Y" || name == "y") return Move::Y;
  if (name == "Z" || name == "z") return Move::Z;
  if (name == "W" || name == "w") return Move::W;
  return std::nullopt;
}

GenVector hurwitz_move(const GenVector& v, Move m) {
  if (v.entries.size() != 4) throw std::invalid_argument("moves act on vectors with four entries");
  const auto& x1 = v.entries[0];
  const auto& x2 = v.entries[1];
  const auto& x3 = v.entries[2];
  for (const auto* p : {&x1, &x2, &x3})
    if (p->order() != 2) throw std::invalid_argument("moves need the first three entries to be involutions");
  const std::size_t degree = x1.degree();
  std::vector<Perm> e;
  switch (m) {
    case Move::Y: {
      const Perm P = x1 * x2 * x3;
      e = {x2, P.inverse() * x1 * P, x3};
      break;
    }
    case Move::Z: e = {x1 * x2 * x1.inverse(), x1, x3}; break;
    case Move::W: e = {x2, x3 * x1 * x3.inverse(), x3}; break;
  }
  e.push_back(product(e, 3, degree).inverse());
  GenVector out{v.signature, std::move(e)};
  const auto problems = gen_vector_problems(out, degree);
  if (!problems.empty())
    throw std::logic_error(std::string("move ") + to_string(m) + " broke the vector: " + problems.front());
  return out;
}

MoveOrbits classes_connected(const std::vector<GenVector>& classes, const std::vector<Move>& moves,
                             std::size_t degree) {
  const auto group = symmetric_group(degree);
  std::map<GenVector, std::size_t> node_of;
  std::vector<GenVector> nodes;
  std::vector<std::size_t> parent;
  auto intern = [&](const GenVector& v) {
    GenVector c = least_conjugate(v, group);
    auto it = node_of.find(c);
    if (it != node_of.end()) return it->second;
    const std::size_t id = nodes.size();
    node_of.emplace(c, id);
    nodes.push_back(std::move(c));
    parent.push_back(id);
    return id;
  };
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };

  std::vector<std::size_t> input_node;
  for (const auto& c : classes) input_node.push_back(intern(c));
  const std::size_t distinct_inputs = nodes.size();

  for (std::size_t k = 0; k < nodes.size(); ++k) {
    for (Move m : moves) {
      const std::size_t to = intern(hurwitz_move(nodes[k], m));
      const std::size_t a = find(k);
      const std::size_t b = find(to);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }

  MoveOrbits out;
  out.extra_classes = nodes.size() - distinct_inputs;
  std::map<std::size_t, std::size_t> orbit_index;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const std::size_t root = find(input_node[i]);
    auto it = orbit_index.find(root);
    if (it == orbit_index.end()) it = orbit_index.emplace(root, orbit_index.size()).first;
    out.orbit.push_back(it->second);
  }
  out.orbit_count = orbit_index.size();

  std::map<std::size_t, std::size_t> input_of_node;
  for (std::size_t i = classes.size(); i-- > 0;) input_of_node[input_node[i]] = i;
  for (Move m : moves) {
    auto& row = out.image[m];
    for (const auto& c : classes) {
      GenVector img = least_conjugate(hurwitz_move(c, m), group);
      auto it = node_of.find(img);
      std::optional<std::size_t> idx;
      if (it != node_of.end()) {
        auto jt = input_of_node.find(it->second);
        if (jt != input_of_node.end()) idx = jt->second;
      }
      row.push_back(idx);
    }
  }
  return out;
}

std::size_t automorphism_count(std::size_t degree) {
  if (degree <= 1) return 1;
  const auto group = symmetric_group(degree);
  std::vector<int> cycle(degree);
  std::iota(cycle.begin(), cycle.end(), 1);
  const std::vector<Perm> gens{Perm::from_cycles(degree, {cycle}),
                               degree >= 2 ? Perm::from_cycles(degree, {{1, 2}}) : Perm::identity(degree)};
  std::map<Perm, std::size_t> index;
  for (std::size_t i = 0; i < group.size(); ++i) index.emplace(group[i], i);

  std::size_t count = 0;
  for (const auto& h1 : group) {
    for (const auto& h2 : group) {
      const std::vector<Perm> images{h1, h2};
      std::vector<std::optional<Perm>> phi(group.size());
      const Perm e = Perm::identity(degree);
      phi[index.at(e)] = e;
      std::vector<Perm> queue{e};
      bool ok = true;
      for (std::size_t q = 0; q < queue.size() && ok; ++q) {
        const Perm x = queue[q];
        const Perm fx = *phi[index.at(x)];
        for (std::size_t g = 0; g < gens.size() && ok; ++g) {
          const Perm y = x * gens[g];
          const Perm fy = fx * images[g];
          auto& slot = phi[index.at(y)];
          if (slot) {
            ok = *slot == fy;
          } else {
            slot = fy;
            queue.push_back(y);
          }
        }
      }
      if (!ok) continue;
      std::set<Perm> image_set;
      for (const auto& v : phi) image_set.insert(*v);
      if (image_set.size() == group.size()) ++count;
    }
  }
  return count;
}

std::size_t inner_automorphism_count(std::size_t degree) {
  const auto group = symmetric_group(degree);
  return group.size() / centralizer(group, degree).size();
}

std::size_t centralizer_order(const std::vector<Perm>& fixed, std::size_t degree) {
  return centralizer(fixed, degree).size();
}

}  // namespace moduli
