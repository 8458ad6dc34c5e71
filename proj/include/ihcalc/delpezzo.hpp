#ifndef IHCALC_DELPEZZO_HPP
#define IHCALC_DELPEZZO_HPP

#include <string>
#include <vector>

#include "ihcalc/catalog.hpp"
#include "ihcalc/poly.hpp"

namespace ihcalc::delpezzo {

// Divisor class m*h - n*e on the one-point blow-up F1 of the plane.
struct DivF1 {
  long long m = 0;
  long long n = 0;
};

// dim H^i(F1, O(mh - ne)) for i = 0, 1, 2
long long f1_cohomology(int i, DivF1 d);
// arithmetic genus of a curve in the class, from adjunction
long long genus_f1(DivF1 d);
// Euler characteristic by Riemann-Roch (used as a cross-check)
long long f1_chi(DivF1 d);

// One pair wall: a flip replacing a P^(fiber_plus)-bundle over the base by a
// P^(fiber_minus)-bundle when the stability parameter decreases through it.
struct WallDatum {
  WallDatum(std::string label, catalog::SpaceExpr base, long long fiber_plus,
            long long fiber_minus);

  std::string label;
  catalog::SpaceExpr base;
  long long fiber_plus;
  long long fiber_minus;
};

enum class CrossDirection { PlusToMinus, MinusToPlus };

// Poincare polynomial of the large-parameter pair space: a P^8-bundle over
// the Hilbert scheme of three points on F1.
TPoly p_pairs_infty();

TPoly apply_walls(const TPoly& start, const std::vector<WallDatum>& walls,
                  CrossDirection direction);

// pair walls of the F1 moduli problem, large parameter first
const std::vector<WallDatum>& f1_wall_table();
// fitted wall data between the plane moduli space and the Kronecker model
const std::vector<WallDatum>& p2_wall_table();

// Poincare polynomial of the small-parameter pair space M^+ on F1
TPoly p_m_plus_f1(const std::vector<WallDatum>& walls = f1_wall_table());
// virtual Poincare polynomial of the sheaf moduli space on F1, via the
// forgetful P^1-fibration over the stable locus
TPoly p_m_f1(const std::vector<WallDatum>& walls = f1_wall_table());
// intersection Poincare polynomial on F1 (E minus the singular-strata
// correction shared with the n = 4 Kronecker space)
TPoly ip_m_f1(const std::vector<WallDatum>& walls = f1_wall_table());
// intersection Poincare polynomial on F0 = P^1 x P^1 (two-point blow-up of
// the n = 3 Kronecker space)
TPoly ip_m_f0();
// intersection Poincare polynomial on P^2 (Bridgeland wall-crossings from
// the n = 5 Kronecker space; walls lie in the smooth locus)
TPoly ip_m_p2(const std::vector<WallDatum>& walls = p2_wall_table());

struct EulerEntry {
  std::string surface;
  BigInt computed;
  long long printed;
  bool match;
};
// computed intersection Euler numbers next to the reference table values
std::vector<EulerEntry> euler_table();

// JSON: [{"label":..,"base":"<catalog expr>","fiber_plus":..,"fiber_minus":..},..]
std::vector<WallDatum> parse_walls_json(const std::string& text);

}  // namespace ihcalc::delpezzo

#endif
