#ifndef IHCALC_KIRWAN_HPP
#define IHCALC_KIRWAN_HPP

#include <map>
#include <string>

#include "ihcalc/poly.hpp"
#include "ihcalc/strat.hpp"

namespace ihcalc::strat {
class ConeValue;
}

namespace ihcalc::kirwan {

// Comparison record for the two-step desingularization pipeline against the
// closed form, with the named intermediates of the computation.
struct KirwanReport {
  long long n = 0;
  TPoly ip_closed;
  TPoly ip_pipeline;
  std::map<std::string, TPoly> intermediates;
  bool agree = false;
};

// Intersection Poincare polynomial of P(Sym^2 C^2 (x) C^n) // SL(2):
// closed form, and the stable-maps blow-down pipeline it came from.
TPoly ip_sym2sl2_closed(long long n);   // n >= 2
TPoly ip_sym2sl2_pipeline(long long n); // n >= 2

// Poincare polynomial of the degree-two stable-maps space to Gr(2,n+1):
// closed form, and the relative-conics blow-up/flip pipeline.
TPoly p_kn_closed(long long n);   // n >= 2
TPoly p_kn_pipeline(long long n); // n >= 3

// Intersection Poincare polynomial of the rank-(2,2) Kronecker module
// space in P^n.
TPoly ip_mn_closed(long long n);        // n >= 2
KirwanReport ip_mn_pipeline(long long n);

// Two sides of the relation between the open-cone polynomials of the two
// singular strata (the diagonal and the rest of the semistable locus).
TPoly univrelation_rhs(long long n);  // n >= 2
strat::LinPoly univrelation_lhs(long long n, const strat::ConeValue& cone_delta,
                                const strat::ConeValue& cone_s);

// E - IE over the two singular strata, derived from the open-cone relation;
// nonpositive away from degree 0, zero in degrees 0 and 2.
TPoly cone_correction(long long n);  // n >= 2

}  // namespace ihcalc::kirwan

#endif
