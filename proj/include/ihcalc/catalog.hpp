#ifndef IHCALC_CATALOG_HPP
#define IHCALC_CATALOG_HPP

#include <string>
#include <string_view>
#include <vector>

#include "ihcalc/poly.hpp"

namespace ihcalc::catalog {

// Symbolic space expression. Atoms evaluate to fixed Poincare polynomials;
// combinators (product, bundle, sym2, blow-up) evaluate recursively.
struct SpaceExpr {
  enum class Kind {
    Point,
    Proj,           // a = n
    Grass,          // a = k, b = n
    Flag13,         // a = m, flags V1 < V3 < C^m
    HilbConicProj,  // a = n, conics in P^(n-1)
    HilbConicGr24,  // conics in Gr(2,4)
    HilbConicRelGr, // a = n, relative conics over Gr(4,n+1)
    Hilb3F1,        // three points on the degree-8 del Pezzo surface F1
    ProjQuadric4,   // rank-4 quadric threefold in P^4
    Literal,
    Product,        // args[0] x args[1]
    Bundle,         // args[0] base, args[1] fiber (locally trivial)
    Sym2,           // symmetric square of args[0]
    BlowUp,         // args[0] blown up along args[1], a = codimension
  };

  Kind kind = Kind::Point;
  long long a = 0;
  long long b = 0;
  std::vector<SpaceExpr> args;
  TPoly lit;
};

SpaceExpr point();
SpaceExpr proj(long long n);
SpaceExpr grass(long long k, long long n);
SpaceExpr flag13(long long m);
SpaceExpr hilb_conic_proj(long long n);
SpaceExpr hilb_conic_gr24();
SpaceExpr hilb_conic_rel_gr(long long n);
SpaceExpr hilb3_f1();
SpaceExpr proj_quadric4();
SpaceExpr literal(TPoly p);
SpaceExpr product(SpaceExpr x, SpaceExpr y);
SpaceExpr bundle(SpaceExpr base, SpaceExpr fiber);
SpaceExpr sym2(SpaceExpr x);
SpaceExpr blow_up(SpaceExpr x, SpaceExpr center, long long codim);

// virtual Poincare polynomial
TPoly p_of(const SpaceExpr& x);
// E-polynomial; all catalog atoms are pure balanced, so this is p_of under
// t^2 = uv
BiPoly e_of(const SpaceExpr& x);
// intersection E-polynomial where a rule is specified (NoIERule otherwise)
BiPoly ie_of(const SpaceExpr& x);

// Intersection Poincare polynomial of the open cone over the Segre variety
// P^a x P^a: the primitive-cohomology truncation below the middle degree.
TPoly ie_cone_segre(long long a);

// Gaussian binomial [n choose k] in q = t^2; zero when k > n
TPoly gaussian_binomial(long long k, long long n);

// Expression grammar used by the CLI:
//   P(n) Gr(k,n) Flag13(m) Hilb3F1 Q4bar pt HilbConicProj(n) HilbConicGr24
//   HilbConicRelGr(n) prod(a,b) bundle(a,b) sym2(a) blowup(X,C,c)
//   lit([c0,c1,...])
SpaceExpr parse(std::string_view text);  // throws ParseError

std::string to_string(const SpaceExpr& x);

}  // namespace ihcalc::catalog

#endif
