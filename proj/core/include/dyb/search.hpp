#ifndef DYB_SEARCH_HPP
#define DYB_SEARCH_HPP

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "dyb/core.hpp"
#include "dyb/matched.hpp"
#include "dyb/postbrace.hpp"

// Exhaustive enumeration of small dynamical structures. The backtracking
// path prunes only with consequences of the axioms (forced unit row/column,
// injective left-translation rows, phi pinned at the unit, incremental
// structure-map and associativity checks); a naive generate-and-filter path
// exists for tiny sizes and must agree with it exactly.

namespace dyb {

enum class StructureKind { dynamical_group, post_group, skew_brace, braided_group };

std::string kind_name(StructureKind k);
StructureKind kind_from_name(const std::string& name);

struct SearchLimits {
  long long max_nodes = 20'000'000;
  double max_seconds = 120.0;
};

/// Budgets are mandatory: non-positive values fall back to the defaults, an
/// unbounded run is not constructible.
struct SearchSpec {
  StructureKind kind = StructureKind::dynamical_group;
  int elem_size = 1;    // N
  int lambda_size = 1;  // L
  SearchLimits limits;
};

/// Budget exhausted mid-search; carries the progress state.
class BudgetExhausted : public std::runtime_error {
 public:
  BudgetExhausted(long long nodes, long long found);
  long long nodes = 0;
  long long found = 0;
};

using Structure = std::variant<DynGroup, PostGroup, SkewBrace, BraidedGroup>;

/// Flattened canonical comparison key: tables and unit in a fixed per-kind
/// order.
std::vector<int> structure_key(const Structure& s);

/// Enumerates exactly the structures passing the corresponding verifier, in
/// canonical (sorted-key) order. Throws BudgetExhausted or ShapeError when
/// the size cap (N <= 3 and L <= 3, or N <= 4 with L = 1) is exceeded.
std::vector<Structure> enumerate_structures(const SearchSpec& spec);

/// Streaming form; the callback sees structures in exploration order.
void enumerate_stream(const SearchSpec& spec,
                      const std::function<void(const Structure&)>& emit);

/// Independent generate-and-filter oracle; feasible only for tiny sizes.
std::vector<Structure> enumerate_naive(const SearchSpec& spec);

long long enumerate_count(const SearchSpec& spec);

/// Number of orbits under simultaneous relabeling of elements and
/// parameters, by canonical-form minimization over both symmetric groups.
long long canonical_count(const SearchSpec& spec);

/// True iff the enumeration emits a structure with exactly the given key.
bool find_containing(const SearchSpec& spec, const std::vector<int>& key);

}  // namespace dyb

#endif
