#include "ihcalc/catalog.hpp"

#include <cctype>

namespace ihcalc::catalog {

SpaceExpr point() { return {}; }

SpaceExpr proj(long long n) {
  SpaceExpr x;
  x.kind = SpaceExpr::Kind::Proj;
  x.a = n;
  return x;
}

SpaceExpr grass(long long k, long long n) {
  SpaceExpr x;
  x.kind = SpaceExpr::Kind::Grass;
  x.a = k;
  x.b = n;
  return x;
}

SpaceExpr flag13(long long m) {
  SpaceExpr x;
  x.kind = SpaceExpr::Kind::Flag13;
  x.a = m;
  return x;
}

SpaceExpr hilb_conic_proj(long long n) {
  SpaceExpr x;
  x.kind = SpaceExpr::Kind::HilbConicProj;
  x.a = n;
  return x;
}

SpaceExpr hilb_conic_gr24() {
  SpaceExpr x;
  x.kind = SpaceExpr::Kind::HilbConicGr24;
  return x;
}

SpaceExpr hilb_conic_rel_gr(long long n) {
  SpaceExpr x;
  x.kind = SpaceExpr::Kind::HilbConicRelGr;
  x.a = n;
  return x;
}

SpaceExpr hilb3_f1() {
  SpaceExpr x;
  x.kind = SpaceExpr::Kind::Hilb3F1;
  return x;
}

SpaceExpr proj_quadric4() {
  SpaceExpr x;
  x.kind = SpaceExpr::Kind::ProjQuadric4;
  return x;
}

SpaceExpr literal(TPoly p) {
  SpaceExpr x;
  x.kind = SpaceExpr::Kind::Literal;
  x.lit = std::move(p);
  return x;
}

SpaceExpr product(SpaceExpr a, SpaceExpr b) {
  SpaceExpr x;
  x.kind = SpaceExpr::Kind::Product;
  x.args.push_back(std::move(a));
  x.args.push_back(std::move(b));
  return x;
}

SpaceExpr bundle(SpaceExpr base, SpaceExpr fiber) {
  SpaceExpr x;
  x.kind = SpaceExpr::Kind::Bundle;
  x.args.push_back(std::move(base));
  x.args.push_back(std::move(fiber));
  return x;
}

SpaceExpr sym2(SpaceExpr a) {
  SpaceExpr x;
  x.kind = SpaceExpr::Kind::Sym2;
  x.args.push_back(std::move(a));
  return x;
}

SpaceExpr blow_up(SpaceExpr a, SpaceExpr center, long long codim) {
  SpaceExpr x;
  x.kind = SpaceExpr::Kind::BlowUp;
  x.args.push_back(std::move(a));
  x.args.push_back(std::move(center));
  x.a = codim;
  return x;
}

TPoly gaussian_binomial(long long k, long long n) {
  if (k < 0 || n < 0)
    throw CalcError("InvalidDimension", "Gaussian binomial with negative argument");
  if (k > n) return TPoly();  // empty Grassmannian
  // product of cyclotomic-style factors in q = t^2, expanded by exact division
  RationalForm rf;
  for (long long i = 1; i <= k; ++i) {
    rf.num_factors.push_back(2 * (n - k + i));
    rf.den_factors.push_back(2 * i);
  }
  return rf.expand();
}

namespace {

TPoly proj_poly(long long n) {
  if (n < 0) throw CalcError("InvalidDimension", "P(n) needs n >= 0");
  RationalForm rf;
  rf.num_factors.push_back(2 * n + 2);
  rf.den_factors.push_back(2);
  return rf.expand();
}

const TPoly& hilb3_f1_poly() {
  static const TPoly p = TPoly::from_coeffs({1, 0, 3, 0, 9, 0, 14, 0, 9, 0, 3, 0, 1});
  return p;
}

const TPoly& quadric4_poly() {
  // E = (uv)^3 + 2(uv)^2 + uv + 1 in the t-normalization
  static const TPoly p = TPoly::from_coeffs({1, 0, 1, 0, 2, 0, 1});
  return p;
}

bool has_ie_rule(const SpaceExpr& x) {
  switch (x.kind) {
    case SpaceExpr::Kind::ProjQuadric4:
    case SpaceExpr::Kind::Literal:
      return false;
    default:
      break;
  }
  for (const SpaceExpr& arg : x.args) {
    if (!has_ie_rule(arg)) return false;
  }
  return true;
}

}  // namespace

TPoly p_of(const SpaceExpr& x) {
  using Kind = SpaceExpr::Kind;
  switch (x.kind) {
    case Kind::Point:
      return TPoly::one();
    case Kind::Proj:
      return proj_poly(x.a);
    case Kind::Grass:
      return gaussian_binomial(x.a, x.b);
    case Kind::Flag13: {
      if (x.a < 1) throw CalcError("InvalidDimension", "Flag13(m) needs m >= 1");
      // point-first fibration of the two-step flag
      return proj_poly(x.a - 1) * gaussian_binomial(2, x.a - 1);
    }
    case Kind::HilbConicProj:
      // P^5-bundle over Gr(3,n)
      if (x.a < 0) throw CalcError("InvalidDimension", "HilbConicProj(n) needs n >= 0");
      return proj_poly(5) * gaussian_binomial(3, x.a);
    case Kind::HilbConicGr24:
      // Gr(3,6) blown up along the two disjoint plane families, each a P^3
      // of codimension 6 (the exceptional fibres are the P^5 of conics in
      // a plane contained in the quadric)
      return gaussian_binomial(3, 6) +
             BigInt(2) * (proj_poly(3) * (proj_poly(5) - TPoly::one()));
    case Kind::HilbConicRelGr:
      // etale-locally trivial fibration over Gr(4,n+1)
      if (x.a < 0) throw CalcError("InvalidDimension", "HilbConicRelGr(n) needs n >= 0");
      return gaussian_binomial(4, x.a + 1) * p_of(hilb_conic_gr24());
    case Kind::Hilb3F1:
      return hilb3_f1_poly();
    case Kind::ProjQuadric4:
      return quadric4_poly();
    case Kind::Literal:
      return x.lit;
    case Kind::Product:
    case Kind::Bundle:
      return p_of(x.args[0]) * p_of(x.args[1]);
    case Kind::Sym2: {
      TPoly p = p_of(x.args[0]);
      if (!p.even_support())
        throw CalcError("OddCohomologyInSym2",
                        "sym2 argument has odd-degree cohomology: " + p.to_string());
      return (p * p + p.stretch(2)).half();
    }
    case Kind::BlowUp: {
      if (x.a < 1) throw CalcError("InvalidDimension", "blow-up codimension must be >= 1");
      return p_of(x.args[0]) + p_of(x.args[1]) * (proj_poly(x.a - 1) - TPoly::one());
    }
  }
  throw CalcError("InvalidArgument", "unknown space expression");
}

BiPoly e_of(const SpaceExpr& x) { return t_to_bi(p_of(x)); }

BiPoly ie_of(const SpaceExpr& x) {
  if (x.kind == SpaceExpr::Kind::ProjQuadric4) {
    // small resolution: E gains one extra uv over the big resolution
    return e_of(x) + BiPoly::monomial(BigInt(1), 1, 1);
  }
  if (!has_ie_rule(x))
    throw CalcError("NoIERule", "no intersection-cohomology rule for " + to_string(x));
  // smooth atoms and finite-quotient combinations: IE = E
  return e_of(x);
}

TPoly ie_cone_segre(long long a) {
  if (a < 1) throw CalcError("InvalidArgument", "segre cone parameter must be >= 1");
  auto lattice = [a](long long k) {
    long long count = 0;
    for (long long i = 0; i <= a; ++i) {
      long long j = k - i;
      if (j >= 0 && j <= a) ++count;
    }
    return count;
  };
  TPoly r;
  for (long long k = 0; k <= a; ++k) {
    long long h = lattice(k);
    long long h_prev = k > 0 ? lattice(k - 1) : 0;
    r += TPoly::monomial(BigInt(h - h_prev), 2 * k);
  }
  return r;
}

// ---------------------------------------------------------------- parser --

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw CalcError("ParseError", msg + " at offset " + std::to_string(pos));
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  long long number() {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) fail("expected integer");
    return std::stoll(std::string(text.substr(start, pos - start)));
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    if (pos == start) fail("expected name");
    return std::string(text.substr(start, pos - start));
  }

  SpaceExpr expr() {
    std::string name = ident();
    if (name == "pt") return point();
    if (name == "Hilb3F1") return hilb3_f1();
    if (name == "Q4bar") return proj_quadric4();
    if (name == "HilbConicGr24") return hilb_conic_gr24();
    if (name == "P") {
      expect('(');
      long long n = number();
      expect(')');
      return proj(n);
    }
    if (name == "Gr") {
      expect('(');
      long long k = number();
      expect(',');
      long long n = number();
      expect(')');
      return grass(k, n);
    }
    if (name == "Flag13") {
      expect('(');
      long long m = number();
      expect(')');
      return flag13(m);
    }
    if (name == "HilbConicProj") {
      expect('(');
      long long n = number();
      expect(')');
      return hilb_conic_proj(n);
    }
    if (name == "HilbConicRelGr") {
      expect('(');
      long long n = number();
      expect(')');
      return hilb_conic_rel_gr(n);
    }
    if (name == "prod" || name == "bundle") {
      expect('(');
      SpaceExpr a = expr();
      expect(',');
      SpaceExpr b = expr();
      expect(')');
      return name == "prod" ? product(std::move(a), std::move(b))
                            : bundle(std::move(a), std::move(b));
    }
    if (name == "sym2") {
      expect('(');
      SpaceExpr a = expr();
      expect(')');
      return sym2(std::move(a));
    }
    if (name == "blowup") {
      expect('(');
      SpaceExpr a = expr();
      expect(',');
      SpaceExpr c = expr();
      expect(',');
      long long codim = number();
      expect(')');
      return blow_up(std::move(a), std::move(c), codim);
    }
    if (name == "lit") {
      expect('(');
      expect('[');
      std::vector<long long> cs;
      if (!eat(']')) {
        cs.push_back(number());
        while (eat(',')) cs.push_back(number());
        expect(']');
      }
      expect(')');
      return literal(TPoly::from_coeffs(cs));
    }
    fail("unknown space '" + name + "'");
  }
};

}  // namespace

SpaceExpr parse(std::string_view text) {
  Parser p{text};
  SpaceExpr e = p.expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return e;
}

std::string to_string(const SpaceExpr& x) {
  using Kind = SpaceExpr::Kind;
  switch (x.kind) {
    case Kind::Point:
      return "pt";
    case Kind::Proj:
      return "P(" + std::to_string(x.a) + ")";
    case Kind::Grass:
      return "Gr(" + std::to_string(x.a) + "," + std::to_string(x.b) + ")";
    case Kind::Flag13:
      return "Flag13(" + std::to_string(x.a) + ")";
    case Kind::HilbConicProj:
      return "HilbConicProj(" + std::to_string(x.a) + ")";
    case Kind::HilbConicGr24:
      return "HilbConicGr24";
    case Kind::HilbConicRelGr:
      return "HilbConicRelGr(" + std::to_string(x.a) + ")";
    case Kind::Hilb3F1:
      return "Hilb3F1";
    case Kind::ProjQuadric4:
      return "Q4bar";
    case Kind::Literal: {
      std::string s = "lit([";
      auto d = x.lit.degree();
      for (long long k = 0; d && k <= *d; ++k) {
        if (k) s += ",";
        s += x.lit.coeff(k).to_string();
      }
      return s + "])";
    }
    case Kind::Product:
      return "prod(" + to_string(x.args[0]) + "," + to_string(x.args[1]) + ")";
    case Kind::Bundle:
      return "bundle(" + to_string(x.args[0]) + "," + to_string(x.args[1]) + ")";
    case Kind::Sym2:
      return "sym2(" + to_string(x.args[0]) + ")";
    case Kind::BlowUp:
      return "blowup(" + to_string(x.args[0]) + "," + to_string(x.args[1]) + "," +
             std::to_string(x.a) + ")";
  }
  return "?";
}

}  // namespace ihcalc::catalog
