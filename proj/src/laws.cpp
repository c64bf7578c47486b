#include "eihg/laws.hpp"

#include <algorithm>
#include <numeric>

#include "eihg/ei.hpp"

namespace eihg {

std::string_view to_string(LawId id) {
  switch (id) {
    case LawId::HypercycleIterate: return "hypercycle-iterate";
    case LawId::HypercycleEiNumber: return "hypercycle-ei-number";
    case LawId::HyperpathEiNumber: return "hyperpath-ei-number";
    case LawId::HyperpathTail: return "hyperpath-tail";
    case LawId::CompleteIterate: return "complete-iterate";
    case LawId::CompleteEiNumber: return "complete-ei-number";
    case LawId::CycleFromHypercycle: return "cycle-from-hypercycle";
    case LawId::CompetitionIdentity: return "competition-identity";
  }
  return "?";
}

const std::vector<LawId>& family_laws() {
  static const std::vector<LawId> laws = {
      LawId::HypercycleIterate, LawId::HypercycleEiNumber, LawId::HyperpathEiNumber,
      LawId::HyperpathTail,     LawId::CompleteIterate,    LawId::CompleteEiNumber,
      LawId::CycleFromHypercycle};
  return laws;
}

std::optional<LawId> law_from_string(std::string_view name) {
  for (LawId id : family_laws()) {
    if (to_string(id) == name) return id;
  }
  if (name == to_string(LawId::CompetitionIdentity)) return LawId::CompetitionIdentity;
  return std::nullopt;
}

namespace {

[[noreturn]] void out_of_range(std::string_view what, std::size_t n, std::size_t d, std::size_t k) {
  throw Error(ErrorKind::OutOfTheoremRange,
              std::string(what) + " has no closed form for n=" + std::to_string(n) +
                  ", d=" + std::to_string(d) + ", k=" + std::to_string(k));
}

std::string describe(const LawValue& v) {
  if (const auto* n = std::get_if<std::size_t>(&v)) return std::to_string(*n);
  const auto& h = std::get<Hypergraph>(v);
  return "hypergraph(v=" + std::to_string(h.vertex_count()) + ",e=" + std::to_string(h.edge_count()) +
         ",max=" + std::to_string(h.max_edge_size()) + ")";
}

Hypergraph union_of(const std::vector<Hypergraph>& parts) {
  Hypergraph acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = hypergraph_union(acc, parts[i]);
  return acc;
}

}  // namespace

std::string format_report(const LawReport& r) {
  return "law=" + std::string(to_string(r.law)) + " n=" + std::to_string(r.params.n) +
         " d=" + std::to_string(r.params.d) + " k=" + std::to_string(r.params.k) +
         " predicted=" + describe(r.predicted) + " computed=" + describe(r.computed) +
         " agrees=" + (r.agrees ? "true" : "false");
}

std::size_t complete_min_size(std::size_t n, std::size_t d, std::size_t k) {
  // 2^k (d - n) + n, evaluated in signed arithmetic since d < n.
  long long t = (1LL << k) * (static_cast<long long>(d) - static_cast<long long>(n)) +
                static_cast<long long>(n);
  return static_cast<std::size_t>(std::max<long long>(2, t));
}

Hypergraph predicted_ei_iter(Family family, std::size_t n, std::size_t d, std::size_t k) {
  std::vector<Hypergraph> parts;
  switch (family) {
    case Family::Hypercycle:
      if (d < 3 || n < 2 * d - 1 || k < 1 || k > d - 2) out_of_range("hypercycle iterate", n, d, k);
      for (std::size_t s = d - k; s >= 2; --s) parts.push_back(hypercycle(n, s));
      return union_of(parts);
    case Family::CompleteUniform: {
      if (d < 3 || n < d + 1 || k < 1 || k > d - 2) out_of_range("complete iterate", n, d, k);
      const std::size_t lo = complete_min_size(n, d, k);
      for (std::size_t s = d - k; s >= lo; --s) parts.push_back(complete_uniform(n, s));
      return union_of(parts);
    }
    default:
      out_of_range(std::string(to_string(family)) + " iterate", n, d, k);
  }
}

std::size_t predicted_ei_number(Family family, std::size_t n, std::size_t d) {
  switch (family) {
    case Family::Hypercycle:
      if (d < 2 || n < 2 * d - 1) out_of_range("hypercycle EI-number", n, d, 0);
      return d - 1;
    case Family::Hyperpath:
      if (d < 2 || n < d) out_of_range("hyperpath EI-number", n, d, 0);
      return n >= 2 * d - 1 ? d - 1 : n - d + 1;
    case Family::CompleteUniform:
      if (d < 2 || n < d + 1) out_of_range("complete EI-number", n, d, 0);
      return d - 1;
    default:
      out_of_range(std::string(to_string(family)) + " EI-number", n, d, 0);
  }
}

std::size_t hyperpath_tail_steps(std::size_t n, std::size_t d) {
  if (d < 2 || n < d) out_of_range("hyperpath tail", n, d, 0);
  return n >= 2 * d - 1 ? d - 2 : n - d;
}

Hypergraph predicted_hyperpath_tail(std::size_t n, std::size_t d) {
  if (d < 2 || n < d) out_of_range("hyperpath tail", n, d, 0);
  std::vector<Edge> edges;
  if (n >= 2 * d - 1) {
    for (std::size_t i = d - 1; i + 1 <= n - d + 2; ++i) {
      edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(i + 1)});
    }
  } else {
    Edge e(2 * d - n);
    std::iota(e.begin(), e.end(), static_cast<VertexId>(n - d + 1));
    edges.push_back(std::move(e));
  }
  return Hypergraph::on_range(static_cast<VertexId>(n), std::move(edges));
}

LawReport verify_law(LawId law, const LawParams& p) {
  LawReport r{law, p, std::size_t{0}, std::size_t{0}, false};
  switch (law) {
    case LawId::HypercycleIterate:
      r.predicted = predicted_ei_iter(Family::Hypercycle, p.n, p.d, p.k);
      r.computed = ei_iterate(hypercycle(p.n, p.d), p.k);
      break;
    case LawId::HypercycleEiNumber:
      r.predicted = predicted_ei_number(Family::Hypercycle, p.n, p.d);
      r.computed = ei_number(hypercycle(p.n, p.d));
      break;
    case LawId::HyperpathEiNumber:
      r.predicted = predicted_ei_number(Family::Hyperpath, p.n, p.d);
      r.computed = ei_number(hyperpath(p.n, p.d));
      break;
    case LawId::HyperpathTail:
      r.predicted = predicted_hyperpath_tail(p.n, p.d);
      r.computed = ei_iterate(hyperpath(p.n, p.d), hyperpath_tail_steps(p.n, p.d));
      break;
    case LawId::CompleteIterate:
      r.predicted = predicted_ei_iter(Family::CompleteUniform, p.n, p.d, p.k);
      r.computed = ei_iterate(complete_uniform(p.n, p.d), p.k);
      break;
    case LawId::CompleteEiNumber:
      r.predicted = predicted_ei_number(Family::CompleteUniform, p.n, p.d);
      r.computed = ei_number(complete_uniform(p.n, p.d));
      break;
    case LawId::CycleFromHypercycle:
      if (p.n < 5) out_of_range("cycle from hypercycle", p.n, 3, 1);
      r.predicted = cycle_graph(p.n).hypergraph();
      r.computed = ei(hypercycle(p.n, 3));
      break;
    case LawId::CompetitionIdentity:
      throw Error(ErrorKind::InvalidSpec, "the competition identity is checked per digraph");
  }
  r.agrees = r.predicted == r.computed;
  return r;
}

std::vector<LawParams> law_sweep(LawId law, std::size_t max_n) {
  std::vector<LawParams> out;
  switch (law) {
    case LawId::HypercycleIterate:
      for (std::size_t d = 3; 2 * d - 1 <= max_n; ++d)
        for (std::size_t n = 2 * d - 1; n <= max_n; ++n)
          for (std::size_t k = 1; k <= d - 2; ++k) out.push_back({n, d, k});
      break;
    case LawId::HypercycleEiNumber:
      for (std::size_t d = 2; 2 * d - 1 <= max_n; ++d)
        for (std::size_t n = 2 * d - 1; n <= max_n; ++n) out.push_back({n, d, 0});
      break;
    case LawId::HyperpathEiNumber:
    case LawId::HyperpathTail:
      for (std::size_t d = 2; d <= max_n; ++d)
        for (std::size_t n = d; n <= max_n; ++n) out.push_back({n, d, 0});
      break;
    case LawId::CompleteIterate:
      for (std::size_t d = 3; d + 1 <= max_n; ++d)
        for (std::size_t n = d + 1; n <= max_n; ++n)
          for (std::size_t k = 1; k <= d - 2; ++k) out.push_back({n, d, k});
      break;
    case LawId::CompleteEiNumber:
      for (std::size_t d = 2; d + 1 <= max_n; ++d)
        for (std::size_t n = d + 1; n <= max_n; ++n) out.push_back({n, d, 0});
      break;
    case LawId::CycleFromHypercycle:
      for (std::size_t n = 5; n <= max_n; ++n) out.push_back({n, 3, 1});
      break;
    case LawId::CompetitionIdentity:
      break;
  }
  return out;
}

}  // namespace eihg
