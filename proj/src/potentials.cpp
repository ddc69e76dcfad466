#include "heaplab/potentials.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "heaplab/constants.hpp"
#include "heaplab/measures.hpp"
#include "heaplab/node_terms.hpp"

namespace heaplab {

const char* potential_kind_name(PotentialKind k) {
  switch (k) {
    case PotentialKind::Rank: return "rank";
    case PotentialKind::MinorRank: return "minor-rank";
    case PotentialKind::KSClamped: return "ks-clamped";
    case PotentialKind::KSUnclamped: return "ks-unclamped";
    case PotentialKind::STIndicator: return "st-indicator";
    case PotentialKind::Convex: return "convex";
  }
  return "?";
}

Potential Potential::convex(double lambda, PotentialKind a, PotentialKind b) {
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw std::invalid_argument("convex lambda must be in [0,1]");
  if (a == PotentialKind::Convex || b == PotentialKind::Convex)
    throw std::invalid_argument("convex components must be simple kinds");
  Potential p(PotentialKind::Convex);
  p.lambda_ = lambda;
  p.a_ = a;
  p.b_ = b;
  return p;
}

std::string Potential::name() const {
  if (kind_ != PotentialKind::Convex) return potential_kind_name(kind_);
  return std::string("convex(") + format_float(lambda_) + "," + potential_kind_name(a_) +
         "," + potential_kind_name(b_) + ")";
}

double potential(const Tree& x, PotentialKind kind) {
  switch (kind) {
    case PotentialKind::Rank: return static_cast<double>(x.rank());
    case PotentialKind::MinorRank: return static_cast<double>(prank_of(x));
    case PotentialKind::KSClamped: return x.phi_ks_clamped();
    case PotentialKind::KSUnclamped: return x.phi_ks_unclamped();
    case PotentialKind::STIndicator: return x.phi_st_indicator();
    case PotentialKind::Convex:
      throw std::invalid_argument("convex potential needs a Potential value");
  }
  return 0.0;
}

double potential(const Tree& x, const Potential& pot) { return pot(x); }

double Potential::operator()(const Tree& x) const {
  if (kind_ != PotentialKind::Convex) return potential(x, kind_);
  return lambda_ * potential(x, a_) + (1.0 - lambda_) * potential(x, b_);
}

double node_potential(const Tree& t, const Tree& u, PotentialKind kind) {
  switch (kind) {
    case PotentialKind::KSClamped: return node_term_ks_clamped(t.sz(), u.sz());
    case PotentialKind::KSUnclamped: return node_term_ks_unclamped(t.sz(), u.sz());
    case PotentialKind::STIndicator: return node_term_st_indicator(t.sz(), u.sz());
    default:
      throw std::invalid_argument("node_potential: kind has no per-node term");
  }
}

bool check_ks_inequality(std::uint64_t m, std::uint64_t n, double tol) {
  if (m == 0 || n == 0) throw std::invalid_argument("check_ks_inequality needs positive m, n");
  const double md = static_cast<double>(m), nd = static_cast<double>(n);
  const double lhs = log_beta(kBeta * nd / (md + nd));
  const double rhs = log_alpha((md + nd) / md);
  return lhs <= rhs + tol;
}

LedgerEntry amortized_step(std::string op, std::uint64_t actual,
                           std::span<const Tree> before, std::span<const Tree> after,
                           const Potential& pot) {
  LedgerEntry e;
  e.op = std::move(op);
  e.actual = actual;
  for (const Tree& t : before) e.phi_before += pot(t);
  for (const Tree& t : after) e.phi_after += pot(t);
  e.amortized = static_cast<double>(actual) + e.phi_after - e.phi_before;
  return e;
}

namespace {

bool leftist(StrategyKind s) {
  return s == StrategyKind::WeightBiased || s == StrategyKind::RankBiased;
}

std::optional<double> simple_bound(std::string_view op, StrategyKind strat, PotentialKind kind,
                                   std::uint64_t sz_input, std::uint64_t sz_result) {
  if (kind == PotentialKind::Rank && leftist(strat)) {
    if (op == "union") return std::log2(static_cast<double>(sz_result));
    if (op == "del_min") return 2.0 * std::log2(static_cast<double>(sz_input));
  }
  if (kind == PotentialKind::KSClamped && strat == StrategyKind::WeightBiased) {
    if (op == "union") return log_phi(static_cast<double>(sz_result));
    if (op == "del_min") return log_phi(static_cast<double>(sz_input));
  }
  return std::nullopt;
}

}  // namespace

std::optional<double> bound_for(std::string_view op, StrategyKind strat, const Potential& pot,
                                std::uint64_t sz_input, std::uint64_t sz_result) {
  if (op != "union" && op != "del_min") return std::nullopt;
  if (pot.kind() != PotentialKind::Convex)
    return simple_bound(op, strat, pot.kind(), sz_input, sz_result);
  const auto ba = simple_bound(op, strat, pot.part_a(), sz_input, sz_result);
  const auto bb = simple_bound(op, strat, pot.part_b(), sz_input, sz_result);
  if (!ba || !bb) return std::nullopt;
  return pot.lambda() * *ba + (1.0 - pot.lambda()) * *bb;
}

std::string format_float(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

double Ledger::sum_actual() const {
  double s = 0.0;
  for (const auto& e : entries_) s += static_cast<double>(e.actual);
  return s;
}

double Ledger::sum_amortized() const {
  double s = 0.0, c = 0.0;
  for (const auto& e : entries_) {
    const double y = e.amortized - c;
    const double t = s + y;
    c = (t - s) - y;
    s = t;
  }
  return s;
}

std::string Ledger::to_csv() const {
  std::string out = "op,actual,phi_before,phi_after,amortized,bound,slack\n";
  for (const auto& e : entries_) {
    out += e.op;
    out += ',' + std::to_string(e.actual);
    out += ',' + format_float(e.phi_before);
    out += ',' + format_float(e.phi_after);
    out += ',' + format_float(e.amortized);
    if (e.bound) {
      out += ',' + format_float(*e.bound);
      out += ',' + format_float(e.slack());
    } else {
      out += ",n/a,n/a";
    }
    out += '\n';
  }
  return out;
}

std::string Ledger::to_json_lines() const {
  std::string out;
  for (const auto& e : entries_) {
    out += "{\"op\":\"" + e.op + "\",\"actual\":" + std::to_string(e.actual);
    out += ",\"phi_before\":" + format_float(e.phi_before);
    out += ",\"phi_after\":" + format_float(e.phi_after);
    out += ",\"amortized\":" + format_float(e.amortized);
    if (e.bound) {
      out += ",\"bound\":" + format_float(*e.bound);
      out += ",\"slack\":" + format_float(e.slack());
    } else {
      out += ",\"bound\":null,\"slack\":null";
    }
    out += "}\n";
  }
  return out;
}

}  // namespace heaplab
