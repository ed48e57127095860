#include "dyb/search.hpp"

#include <algorithm>
#include <chrono>

namespace dyb {

std::string kind_name(StructureKind k) {
  switch (k) {
    case StructureKind::dynamical_group: return "dynamical_group";
    case StructureKind::post_group: return "post_group";
    case StructureKind::skew_brace: return "skew_brace";
    case StructureKind::braided_group: return "braided_group";
  }
  return "unknown";
}

StructureKind kind_from_name(const std::string& name) {
  if (name == "dynamical_group") return StructureKind::dynamical_group;
  if (name == "post_group") return StructureKind::post_group;
  if (name == "skew_brace") return StructureKind::skew_brace;
  if (name == "braided_group") return StructureKind::braided_group;
  throw ShapeError("unknown structure kind: " + name);
}

BudgetExhausted::BudgetExhausted(long long n, long long f)
    : std::runtime_error("search budget exhausted after " + std::to_string(n) +
                         " nodes, " + std::to_string(f) + " structures found"),
      nodes(n), found(f) {}

namespace {

struct BudgetGuard {
  long long max_nodes;
  std::chrono::steady_clock::time_point deadline;
  long long nodes = 0;
  long long found = 0;

  explicit BudgetGuard(const SearchLimits& lim) {
    SearchLimits eff = lim;
    if (eff.max_nodes <= 0) eff.max_nodes = SearchLimits{}.max_nodes;
    if (eff.max_seconds <= 0) eff.max_seconds = SearchLimits{}.max_seconds;
    max_nodes = eff.max_nodes;
    deadline = std::chrono::steady_clock::now() +
               std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                   std::chrono::duration<double>(eff.max_seconds));
  }

  void tick() {
    if (++nodes > max_nodes) throw BudgetExhausted(nodes, found);
    if ((nodes & 0xfff) == 0 && std::chrono::steady_clock::now() > deadline)
      throw BudgetExhausted(nodes, found);
  }
};

void check_caps(const SearchSpec& spec) {
  int n = spec.elem_size, l = spec.lambda_size;
  if (n < 1 || l < 1) throw ShapeError("enumerate: sizes must be positive");
  bool ok = (n <= 3 && l <= 3) || (n <= 4 && l == 1);
  if (!ok)
    throw ShapeError("enumerate: size cap exceeded (N <= 3 with L <= 3, or N <= 4 with L = 1)");
}

std::vector<std::vector<int>> permutations_of(int n) {
  std::vector<int> p(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i;
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<std::vector<int>> permutations_fixing(int n, int fixed) {
  std::vector<std::vector<int>> out;
  for (auto& p : permutations_of(n))
    if (p[static_cast<size_t>(fixed)] == fixed) out.push_back(p);
  return out;
}

// All ordinary group tables on n elements with the given unit, in
// lexicographic table order.
std::vector<Table2> group_tables_with_unit(int n, int e, BudgetGuard& budget) {
  std::vector<Table2> out;
  Table2 t(n, n, -1);
  for (int b = 0; b < n; ++b) t.at(e, b) = b;
  for (int a = 0; a < n; ++a) t.at(a, e) = a;
  std::vector<int> free_rows;
  for (int a = 0; a < n; ++a)
    if (a != e) free_rows.push_back(a);
  auto rows = permutations_of(n);

  std::function<void(size_t)> go = [&](size_t idx) {
    budget.tick();
    if (idx == free_rows.size()) {
      if (verify_group_table(t, e).passed) out.push_back(t);
      return;
    }
    int a = free_rows[idx];
    for (const auto& row : rows) {
      if (row[static_cast<size_t>(e)] != a) continue;
      for (int b = 0; b < n; ++b) t.at(a, b) = row[static_cast<size_t>(b)];
      go(idx + 1);
    }
    for (int b = 0; b < n; ++b)
      if (b != e) t.at(a, b) = -1;
  };
  go(0);
  return out;
}

// Iterate all phi tables with phi(lambda, e) = lambda, as a mixed-radix
// counter over the free cells in lexicographic (lambda, x) order.
template <typename Fn>
void for_each_phi_with_unit(int l, int n, int e, const Fn& fn) {
  std::vector<std::pair<int, int>> cells;
  for (int lam = 0; lam < l; ++lam)
    for (int x = 0; x < n; ++x)
      if (x != e) cells.emplace_back(lam, x);
  Table2 phi(l, n);
  for (int lam = 0; lam < l; ++lam) phi.at(lam, e) = lam;
  std::vector<int> digits(cells.size(), 0);
  while (true) {
    for (size_t i = 0; i < cells.size(); ++i)
      phi.at(cells[i].first, cells[i].second) = digits[i];
    fn(phi);
    size_t i = cells.size();
    while (i > 0) {
      --i;
      if (++digits[i] < l) break;
      digits[i] = 0;
      if (i == 0) return;
    }
    if (cells.empty()) return;
  }
}

// Backtracking enumeration of dynamical groups with a fixed unit: unit row
// and column forced, left-translation rows kept injective, phi pinned at the
// unit, per-cell structure-map check and incremental associativity on
// completed prefixes.
template <typename Fn>
void enumerate_groups_with_unit(int n, int l, int e, BudgetGuard& budget,
                                const Fn& emit) {
  for_each_phi_with_unit(l, n, e, [&](const Table2& phi) {
    Table3 prod(l, n, n, -1);
    for (int lam = 0; lam < l; ++lam)
      for (int b = 0; b < n; ++b) {
        prod.at(lam, e, b) = b;
        prod.at(lam, b, e) = b;
      }
    std::vector<std::array<int, 3>> cells;
    for (int lam = 0; lam < l; ++lam)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (a != e && b != e) cells.push_back({lam, a, b});

    auto assoc_ok_partial = [&]() {
      for (int lam = 0; lam < l; ++lam)
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) {
            int ab = prod.at(lam, a, b);
            if (ab < 0) continue;
            int mu = phi.at(lam, a);
            for (int c = 0; c < n; ++c) {
              int bc = prod.at(mu, b, c);
              if (bc < 0) continue;
              int lhs = prod.at(lam, a, bc);
              int rhs = prod.at(lam, ab, c);
              if (lhs >= 0 && rhs >= 0 && lhs != rhs) return false;
            }
          }
      return true;
    };

    std::function<void(size_t)> go = [&](size_t idx) {
      budget.tick();
      if (idx == cells.size()) {
        DynGroup g(DynSet(l, n, phi), prod, e);
        if (verify_dyn_group(g).passed) {
          g.inverse = inverse_table(g);
          ++budget.found;
          emit(g);
        }
        return;
      }
      auto [lam, a, b] = cells[idx];
      int target_phi = phi.at(phi.at(lam, a), b);
      for (int v = 0; v < n; ++v) {
        if (phi.at(lam, v) != target_phi) continue;
        bool used = false;
        for (int b2 = 0; b2 < n && !used; ++b2)
          used = prod.at(lam, a, b2) == v;
        if (used) continue;
        prod.at(lam, a, b) = v;
        if (assoc_ok_partial()) go(idx + 1);
        prod.at(lam, a, b) = -1;
      }
    };
    go(0);
  });
}

// Backtracking over tri rows for post-groups: the unit row is the identity,
// every other row is a permutation fixing the unit.
template <typename Fn>
void enumerate_posts_with_unit(int n, int l, int e, BudgetGuard& budget,
                               const Fn& emit) {
  auto dots = group_tables_with_unit(n, e, budget);
  auto fixing = permutations_fixing(n, e);

  std::vector<int> dot_choice(static_cast<size_t>(l), 0);
  std::vector<std::pair<int, int>> tri_rows;  // (lambda, a) with a != e
  for (int lam = 0; lam < l; ++lam)
    for (int a = 0; a < n; ++a)
      if (a != e) tri_rows.emplace_back(lam, a);

  while (true) {
    Table3 dot(l, n, n);
    for (int lam = 0; lam < l; ++lam) {
      const Table2& slice = dots[static_cast<size_t>(dot_choice[static_cast<size_t>(lam)])];
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) dot.at(lam, a, b) = slice.at(a, b);
    }
    for_each_phi_with_unit(l, n, e, [&](const Table2& phi) {
      Table3 tri(l, n, n);
      for (int lam = 0; lam < l; ++lam)
        for (int b = 0; b < n; ++b) tri.at(lam, e, b) = b;

      std::function<void(size_t)> go = [&](size_t idx) {
        budget.tick();
        if (idx == tri_rows.size()) {
          PostGroup p(DynSet(l, n, phi), dot, tri, e);
          if (verify_post_group(p).passed) {
            ++budget.found;
            emit(checked_post_group(std::move(p)));
          }
          return;
        }
        auto [lam, a] = tri_rows[idx];
        for (const auto& row : fixing) {
          for (int b = 0; b < n; ++b) tri.at(lam, a, b) = row[static_cast<size_t>(b)];
          go(idx + 1);
        }
      };
      go(0);
    });
    size_t i = dot_choice.size();
    bool done = true;
    while (i > 0) {
      --i;
      if (++dot_choice[i] < static_cast<int>(dots.size())) {
        done = false;
        break;
      }
      dot_choice[i] = 0;
      if (i == 0) break;
    }
    if (done) return;
  }
}

bool brace_compat_holds(const DynGroup& circ_group, const Table3& dot,
                        const Table2& dot_inv) {
  const int l = circ_group.l(), n = circ_group.n();
  for (int lam = 0; lam < l; ++lam)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          int lhs = circ_group.op(lam, a, dot.at(circ_group.phi(lam, a), b, c));
          int rhs = dot.at(lam,
                           dot.at(lam, circ_group.op(lam, a, b), dot_inv.at(lam, a)),
                           circ_group.op(lam, a, c));
          if (lhs != rhs) return false;
        }
  return true;
}

template <typename Fn>
void enumerate_all(const SearchSpec& spec, BudgetGuard& budget, const Fn& emit) {
  const int n = spec.elem_size, l = spec.lambda_size;
  switch (spec.kind) {
    case StructureKind::dynamical_group:
      for (int e = 0; e < n; ++e)
        enumerate_groups_with_unit(n, l, e, budget,
                                   [&](const DynGroup& g) { emit(Structure(g)); });
      break;
    case StructureKind::post_group:
      for (int e = 0; e < n; ++e)
        enumerate_posts_with_unit(n, l, e, budget,
                                  [&](const PostGroup& p) { emit(Structure(p)); });
      break;
    case StructureKind::braided_group:
      for (int e = 0; e < n; ++e)
        enumerate_posts_with_unit(n, l, e, budget, [&](const PostGroup& p) {
          emit(Structure(post_to_braided(p)));
        });
      break;
    case StructureKind::skew_brace:
      for (int e = 0; e < n; ++e) {
        auto dots = group_tables_with_unit(n, e, budget);
        enumerate_groups_with_unit(n, l, e, budget, [&](const DynGroup& circ) {
          std::vector<int> choice(static_cast<size_t>(l), 0);
          while (true) {
            budget.tick();
            Table3 dot(l, n, n);
            for (int lam = 0; lam < l; ++lam) {
              const Table2& s = dots[static_cast<size_t>(choice[static_cast<size_t>(lam)])];
              for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) dot.at(lam, a, b) = s.at(a, b);
            }
            Table2 dinv(l, n, -1);
            for (int lam = 0; lam < l; ++lam)
              for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                  if (dot.at(lam, a, b) == e && dot.at(lam, b, a) == e) {
                    dinv.at(lam, a) = b;
                    break;
                  }
            if (brace_compat_holds(circ, dot, dinv)) {
              SkewBrace s(circ.base, dot, circ.product, e);
              if (verify_skew_brace(s).passed) {
                ++budget.found;
                emit(Structure(checked_skew_brace(std::move(s))));
              }
            }
            size_t i = choice.size();
            bool done = true;
            while (i > 0) {
              --i;
              if (++choice[i] < static_cast<int>(dots.size())) {
                done = false;
                break;
              }
              choice[i] = 0;
              if (i == 0) break;
            }
            if (done) return;
          }
        });
      }
      break;
  }
}

template <typename Fn>
void for_each_table3(int d0, int d1, int d2, int radix, BudgetGuard& budget,
                     const Fn& fn) {
  Table3 t(d0, d1, d2, 0);
  size_t cells = static_cast<size_t>(d0) * d1 * d2;
  while (true) {
    budget.tick();
    fn(t);
    size_t i = cells;
    auto& flat = t.mutable_flat();
    while (i > 0) {
      --i;
      if (++flat[i] < radix) break;
      flat[i] = 0;
      if (i == 0) return;
    }
    if (cells == 0) return;
  }
}

template <typename Fn>
void for_each_table2(int d0, int d1, int radix, BudgetGuard& budget, const Fn& fn) {
  Table2 t(d0, d1, 0);
  size_t cells = static_cast<size_t>(d0) * d1;
  while (true) {
    budget.tick();
    fn(t);
    size_t i = cells;
    auto& flat = t.mutable_flat();
    while (i > 0) {
      --i;
      if (++flat[i] < radix) break;
      flat[i] = 0;
      if (i == 0) return;
    }
    if (cells == 0) return;
  }
}

}  // namespace

std::vector<int> structure_key(const Structure& s) {
  std::vector<int> key;
  auto append2 = [&key](const Table2& t) {
    key.insert(key.end(), t.flat().begin(), t.flat().end());
  };
  auto append3 = [&key](const Table3& t) {
    key.insert(key.end(), t.flat().begin(), t.flat().end());
  };
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, DynGroup>) {
          key.push_back(v.unit);
          append2(v.base.phi);
          append3(v.product);
        } else if constexpr (std::is_same_v<T, PostGroup>) {
          key.push_back(v.unit);
          append2(v.base.phi);
          append3(v.dot);
          append3(v.tri);
        } else if constexpr (std::is_same_v<T, SkewBrace>) {
          key.push_back(v.unit);
          append2(v.base.phi);
          append3(v.dot);
          append3(v.circ);
        } else {
          key.push_back(v.g.unit);
          append2(v.g.base.phi);
          append3(v.g.product);
          append3(v.rharp);
          append3(v.lharp);
        }
      },
      s);
  return key;
}

void enumerate_stream(const SearchSpec& spec,
                      const std::function<void(const Structure&)>& emit) {
  check_caps(spec);
  BudgetGuard budget(spec.limits);
  enumerate_all(spec, budget, emit);
}

std::vector<Structure> enumerate_structures(const SearchSpec& spec) {
  std::vector<Structure> out;
  enumerate_stream(spec, [&](const Structure& s) { out.push_back(s); });
  std::sort(out.begin(), out.end(), [](const Structure& a, const Structure& b) {
    return structure_key(a) < structure_key(b);
  });
  return out;
}

long long enumerate_count(const SearchSpec& spec) {
  long long count = 0;
  enumerate_stream(spec, [&](const Structure&) { ++count; });
  return count;
}

std::vector<Structure> enumerate_naive(const SearchSpec& spec) {
  check_caps(spec);
  BudgetGuard budget(spec.limits);
  const int n = spec.elem_size, l = spec.lambda_size;
  std::vector<Structure> out;

  for_each_table2(l, n, l, budget, [&](const Table2& phi) {
    DynSet base(l, n, phi);
    switch (spec.kind) {
      case StructureKind::dynamical_group:
        for_each_table3(l, n, n, n, budget, [&](const Table3& prod) {
          for (int e = 0; e < n; ++e) {
            DynGroup g(base, prod, e);
            if (verify_dyn_group(g).passed) {
              g.inverse = inverse_table(g);
              out.emplace_back(std::move(g));
            }
          }
        });
        break;
      case StructureKind::post_group:
        for_each_table3(l, n, n, n, budget, [&](const Table3& dot) {
          for_each_table3(l, n, n, n, budget, [&](const Table3& tri) {
            for (int e = 0; e < n; ++e) {
              PostGroup p(base, dot, tri, e);
              if (verify_post_group(p).passed)
                out.emplace_back(checked_post_group(std::move(p)));
            }
          });
        });
        break;
      case StructureKind::skew_brace:
        for_each_table3(l, n, n, n, budget, [&](const Table3& dot) {
          for_each_table3(l, n, n, n, budget, [&](const Table3& circ) {
            for (int e = 0; e < n; ++e) {
              SkewBrace s(base, dot, circ, e);
              if (verify_skew_brace(s).passed)
                out.emplace_back(checked_skew_brace(std::move(s)));
            }
          });
        });
        break;
      case StructureKind::braided_group:
        for_each_table3(l, n, n, n, budget, [&](const Table3& prod) {
          for (int e = 0; e < n; ++e) {
            DynGroup g(base, prod, e);
            if (!verify_dyn_group(g).passed) continue;
            g.inverse = inverse_table(g);
            for_each_table3(l, n, n, n, budget, [&](const Table3& rharp) {
              for_each_table3(l, n, n, n, budget, [&](const Table3& lharp) {
                BraidedGroup b(g, rharp, lharp);
                if (verify_braided(b).passed) out.emplace_back(std::move(b));
              });
            });
          }
        });
        break;
    }
  });
  std::sort(out.begin(), out.end(), [](const Structure& a, const Structure& b) {
    return structure_key(a) < structure_key(b);
  });
  return out;
}

namespace {

Table2 relabel2_phi(const Table2& phi, const std::vector<int>& pi,
                    const std::vector<int>& tau) {
  Table2 out(phi.dim0(), phi.dim1());
  for (int lam = 0; lam < phi.dim0(); ++lam)
    for (int x = 0; x < phi.dim1(); ++x)
      out.at(tau[static_cast<size_t>(lam)], pi[static_cast<size_t>(x)]) =
          tau[static_cast<size_t>(phi.at(lam, x))];
  return out;
}

Table3 relabel3(const Table3& t, const std::vector<int>& pi,
                const std::vector<int>& tau) {
  Table3 out(t.dim0(), t.dim1(), t.dim2());
  for (int lam = 0; lam < t.dim0(); ++lam)
    for (int a = 0; a < t.dim1(); ++a)
      for (int b = 0; b < t.dim2(); ++b)
        out.at(tau[static_cast<size_t>(lam)], pi[static_cast<size_t>(a)],
               pi[static_cast<size_t>(b)]) = pi[static_cast<size_t>(t.at(lam, a, b))];
  return out;
}

Structure relabel_structure(const Structure& s, const std::vector<int>& pi,
                            const std::vector<int>& tau) {
  return std::visit(
      [&](const auto& v) -> Structure {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, DynGroup>) {
          DynSet base(v.base.lambda_size, v.base.elem_size,
                      relabel2_phi(v.base.phi, pi, tau));
          return DynGroup(std::move(base), relabel3(v.product, pi, tau),
                          pi[static_cast<size_t>(v.unit)]);
        } else if constexpr (std::is_same_v<T, PostGroup>) {
          DynSet base(v.base.lambda_size, v.base.elem_size,
                      relabel2_phi(v.base.phi, pi, tau));
          return PostGroup(std::move(base), relabel3(v.dot, pi, tau),
                           relabel3(v.tri, pi, tau), pi[static_cast<size_t>(v.unit)]);
        } else if constexpr (std::is_same_v<T, SkewBrace>) {
          DynSet base(v.base.lambda_size, v.base.elem_size,
                      relabel2_phi(v.base.phi, pi, tau));
          return SkewBrace(std::move(base), relabel3(v.dot, pi, tau),
                           relabel3(v.circ, pi, tau), pi[static_cast<size_t>(v.unit)]);
        } else {
          DynSet base(v.g.base.lambda_size, v.g.base.elem_size,
                      relabel2_phi(v.g.base.phi, pi, tau));
          DynGroup g(std::move(base), relabel3(v.g.product, pi, tau),
                     pi[static_cast<size_t>(v.g.unit)]);
          return BraidedGroup(std::move(g), relabel3(v.rharp, pi, tau),
                              relabel3(v.lharp, pi, tau));
        }
      },
      s);
}

}  // namespace

long long canonical_count(const SearchSpec& spec) {
  auto all = enumerate_structures(spec);
  auto elem_perms = permutations_of(spec.elem_size);
  auto lam_perms = permutations_of(spec.lambda_size);
  std::vector<std::vector<int>> canon;
  for (const auto& s : all) {
    std::vector<int> best;
    for (const auto& pi : elem_perms)
      for (const auto& tau : lam_perms) {
        auto key = structure_key(relabel_structure(s, pi, tau));
        if (best.empty() || key < best) best = std::move(key);
      }
    canon.push_back(std::move(best));
  }
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
  return static_cast<long long>(canon.size());
}

bool find_containing(const SearchSpec& spec, const std::vector<int>& key) {
  bool found = false;
  enumerate_stream(spec, [&](const Structure& s) {
    if (!found && structure_key(s) == key) found = true;
  });
  return found;
}

}  // namespace dyb
