#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "eihg/generators.hpp"
#include "eihg/hypergraph.hpp"

namespace eihg {

enum class LawId {
  HypercycleIterate,   // EI^k of a strong hypercycle is a union of hypercycles
  HypercycleEiNumber,  // EI-number of a strong hypercycle is d-1
  HyperpathEiNumber,   // d-1 for n >= 2d-1, else n-d+1
  HyperpathTail,       // shape of the last nonempty hyperpath iterate
  CompleteIterate,     // EI^k of K_n^d is K_n^{d-k} u ... u K_n^{t_k}
  CompleteEiNumber,    // EI-number of K_n^d is d-1
  CycleFromHypercycle, // EI of the 3-uniform hypercycle is the cycle C_n
  CompetitionIdentity, // neighborhood-hypergraph identity of a digraph
};

std::string_view to_string(LawId id);
std::optional<LawId> law_from_string(std::string_view name);
const std::vector<LawId>& family_laws();

struct LawParams {
  std::size_t n = 0;
  std::size_t d = 0;
  std::size_t k = 0;
};

using LawValue = std::variant<Hypergraph, std::size_t>;

struct LawReport {
  LawId law;
  LawParams params;
  LawValue predicted;
  LawValue computed;
  bool agrees = false;
};

/// One line: `law=<id> n=.. d=.. k=.. predicted=.. computed=.. agrees=true|false`.
std::string format_report(const LawReport& r);

/// Closed-form EI^k for hypercycles (d >= 3, n >= 2d-1, 1 <= k <= d-2) and
/// complete uniform hypergraphs (n-1 >= d >= 3, 1 <= k <= d-2).
/// Other families or parameters throw `OutOfTheoremRange`.
Hypergraph predicted_ei_iter(Family family, std::size_t n, std::size_t d, std::size_t k);

/// Closed-form EI-number for hypercycles (d >= 2, n >= 2d-1), hyperpaths
/// (2 <= d <= n) and complete uniform hypergraphs (d >= 2, n >= d+1).
std::size_t predicted_ei_number(Family family, std::size_t n, std::size_t d);

/// Predicted last nonempty iterate of a hyperpath: for n >= 2d-1 the path on
/// v_{d-1}..v_{n-d+2} (reached after d-2 steps, the rest isolated); for
/// d <= n < 2d-1 the single edge {v_{n-d+1}, ..., v_d} (after n-d steps).
Hypergraph predicted_hyperpath_tail(std::size_t n, std::size_t d);

/// Number of EI steps after which `predicted_hyperpath_tail` is reached.
std::size_t hyperpath_tail_steps(std::size_t n, std::size_t d);

/// t_k = max{2, 2^k (d - n) + n}, smallest edge size in EI^k(K_n^d).
std::size_t complete_min_size(std::size_t n, std::size_t d, std::size_t k);

/// Compares the closed form against brute-force iteration of `ei`.
/// `CompetitionIdentity` is a digraph law and is checked by `check_competition_identity`.
LawReport verify_law(LawId law, const LawParams& params);

/// Every in-range parameter tuple for `law` with n <= max_n.
std::vector<LawParams> law_sweep(LawId law, std::size_t max_n);

}  // namespace eihg
