#include "ihcalc/verify.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "ihcalc/catalog.hpp"
#include "ihcalc/delpezzo.hpp"
#include "ihcalc/kirwan.hpp"
#include "ihcalc/strat.hpp"

namespace ihcalc::verify {

namespace {

using catalog::grass;
using catalog::p_of;
using catalog::proj;
using catalog::sym2;

// dense even-degree polynomial from its t^0, t^2, t^4, ... coefficients
TPoly even_poly(const std::vector<long long>& half) {
  TPoly p;
  for (std::size_t k = 0; k < half.size(); ++k)
    p += TPoly::monomial(BigInt(half[k]), 2 * static_cast<long long>(k));
  return p;
}

// ---- reference displays ---------------------------------------------------

// pair space at the small-parameter side, as printed in the reference data
const TPoly& printed_pairs_plus() {
  static const TPoly p =
      even_poly({1, 4, 11, 18, 23, 24, 24, 24, 24, 24, 23, 18, 11, 4, 1});
  return p;
}

const TPoly& printed_p_f1() {
  static const TPoly p = even_poly({1, 3, 6, 8, 7, 7, 6, 8, 8, 10, 9, 8, 3, 1});
  return p;
}

const TPoly& printed_ip_f1() {
  static const TPoly p = even_poly({1, 3, 8, 10, 11, 11, 11, 11, 11, 11, 10, 8, 3, 1});
  return p;
}

const TPoly& printed_ip_f0() {
  static const TPoly p = even_poly({1, 3, 4, 4, 4, 4, 4, 4, 3, 1});
  return p;
}

const TPoly& printed_ip_p2() {
  static const TPoly p =
      even_poly({1, 2, 6, 10, 14, 15, 16, 16, 16, 16, 16, 16, 15, 14, 10, 6, 2, 1});
  return p;
}

// ---- independent oracles --------------------------------------------------

// Gaussian binomial by the Pascal recursion (independent of the
// division-based implementation); returned in q = t^2.
TPoly qbin_oracle(long long n, long long k) {
  if (k < 0 || k > n) return TPoly();
  std::vector<std::vector<TPoly>> c(n + 1, std::vector<TPoly>(k + 1));
  for (long long i = 0; i <= n; ++i) {
    for (long long j = 0; j <= std::min(i, k); ++j) {
      if (j == 0 || j == i) {
        c[i][j] = TPoly::one();
      } else {
        c[i][j] = c[i - 1][j] + TPoly::monomial(BigInt(1), i - j) * c[i - 1][j - 1];
      }
    }
  }
  return c[n][k].stretch(2);
}

// Gaussian multinomial [m; 1, 2, m-3] as the inversion generating function
// of multiset words, returned in q = t^2.
TPoly qmultinomial_oracle(long long m) {
  std::vector<int> word;
  word.push_back(0);
  word.insert(word.end(), 2, 1);
  word.insert(word.end(), static_cast<std::size_t>(m - 3), 2);
  std::sort(word.begin(), word.end());
  TPoly acc;
  do {
    long long inv = 0;
    for (std::size_t i = 0; i < word.size(); ++i) {
      for (std::size_t j = i + 1; j < word.size(); ++j) {
        if (word[i] > word[j]) ++inv;
      }
    }
    acc += TPoly::monomial(BigInt(1), inv);
  } while (std::next_permutation(word.begin(), word.end()));
  return acc.stretch(2);
}

// q^3 coefficient of prod_m (1-t^(2m-2)q^m)^-1 (1-t^(2m)q^m)^-2
// (1-t^(2m+2)q^m)^-1, the point-counting series for the surface with Betti
// numbers 1, 0, 2, 0, 1.
TPoly goettsche_q3_oracle() {
  std::array<TPoly, 4> series{TPoly::one(), TPoly(), TPoly(), TPoly()};
  auto mul_inverse_factor = [&series](long long t_exp, long long q_exp) {
    std::array<TPoly, 4> out{};
    for (long long k = 0; k <= 3; ++k) {
      for (long long j = 0; q_exp * j <= k; ++j)
        out[k] += series[k - q_exp * j] * TPoly::monomial(BigInt(1), t_exp * j);
    }
    series = out;
  };
  for (long long m = 1; m <= 3; ++m) {
    mul_inverse_factor(2 * m - 2, m);
    mul_inverse_factor(2 * m, m);
    mul_inverse_factor(2 * m, m);
    mul_inverse_factor(2 * m + 2, m);
  }
  return series[3];
}

std::string diff_detail(const TPoly& computed, const TPoly& reference) {
  return "computed " + computed.to_string() + "; reference " + reference.to_string() +
         "; difference " + (computed - reference).to_string();
}

struct Runner {
  std::vector<Check> checks;
  bool strict = false;

  void add(std::string id, std::string description, const std::function<bool(std::string&)>& fn) {
    Check c;
    c.id = std::move(id);
    c.description = std::move(description);
    try {
      std::string detail;
      bool ok = fn(detail);
      c.status = ok ? Status::Pass : Status::Fail;
      c.detail = detail;
    } catch (const CalcError& e) {
      c.status = Status::Fail;
      c.detail = e.what();
    }
    checks.push_back(std::move(c));
  }

  // documented discrepancy: the mismatch itself is expected and reported
  void add_documented(std::string id, std::string description,
                      const std::function<bool(std::string&)>& fn) {
    Check c;
    c.id = std::move(id);
    c.description = std::move(description);
    try {
      std::string detail;
      bool as_documented = fn(detail);
      c.status = as_documented ? (strict ? Status::Fail : Status::Warn) : Status::Fail;
      c.detail = detail;
    } catch (const CalcError& e) {
      c.status = Status::Fail;
      c.detail = e.what();
    }
    checks.push_back(std::move(c));
  }
};

}  // namespace

std::vector<Check> run_all(const Options& options) {
  Runner r;
  r.strict = options.strict;
  const long long max_n = std::max<long long>(2, options.max_n);

  // -- main pipeline agreements ---------------------------------------------

  r.add("kirwan/mn-agree", "two-step desingularization pipeline matches the closed form",
        [&](std::string& detail) {
          for (long long n = 2; n <= max_n; ++n) {
            auto report = kirwan::ip_mn_pipeline(n);
            if (!report.agree) {
              detail = "n=" + std::to_string(n) + ": " +
                       diff_detail(report.ip_pipeline, report.ip_closed);
              return false;
            }
          }
          detail = "n=2.." + std::to_string(max_n);
          return true;
        });

  r.add("kirwan/m2-value", "n=2 closed form equals the projective 5-space polynomial",
        [&](std::string& detail) {
          TPoly expect = even_poly({1, 1, 1, 1, 1, 1});
          TPoly got = kirwan::ip_mn_closed(2);
          if (got == expect) return true;
          detail = diff_detail(got, expect);
          return false;
        });

  r.add("kirwan/sym2sl2-agree", "SL2-quotient pipeline matches its closed form",
        [&](std::string& detail) {
          for (long long n = 2; n <= max_n; ++n) {
            if (kirwan::ip_sym2sl2_pipeline(n) != kirwan::ip_sym2sl2_closed(n)) {
              detail = "n=" + std::to_string(n);
              return false;
            }
          }
          detail = "n=2.." + std::to_string(max_n);
          return true;
        });

  r.add("kirwan/kn-agree", "stable-maps space pipeline matches its closed form",
        [&](std::string& detail) {
          for (long long n = 3; n <= max_n; ++n) {
            if (kirwan::p_kn_pipeline(n) != kirwan::p_kn_closed(n)) {
              detail = "n=" + std::to_string(n);
              return false;
            }
          }
          detail = "n=3.." + std::to_string(max_n);
          return true;
        });

  // -- quadric cone fixture ---------------------------------------------------

  r.add("catalog/quadric-e", "E-polynomial of the rank-4 quadric threefold",
        [](std::string& detail) {
          BiPoly expect = t_to_bi(even_poly({1, 1, 2, 1}));
          BiPoly got = catalog::e_of(catalog::proj_quadric4());
          if (got == expect) return true;
          detail = "computed " + got.to_string();
          return false;
        });

  r.add("catalog/quadric-ie", "IE-polynomial of the rank-4 quadric threefold",
        [](std::string& detail) {
          BiPoly expect = t_to_bi(even_poly({1, 2, 2, 1}));
          BiPoly got = catalog::ie_of(catalog::proj_quadric4());
          if (got == expect) return true;
          detail = "computed " + got.to_string();
          return false;
        });

  r.add("strat/quadric-cone-solve", "vertex cone of the quadric solved from E vs IE",
        [](std::string& detail) {
          strat::Stratification s(
              {{"vertex", TPoly::one()},
               {"cone", bi_to_t(catalog::ie_of(catalog::proj_quadric4()))}},
              {{{"vertex", "cone"}, strat::ConeValue::unknown("x")}});
          TPoly ie_total = bi_to_t(catalog::ie_of(catalog::proj_quadric4()));
          TPoly e_total = bi_to_t(catalog::e_of(catalog::proj_quadric4()));
          auto solution = strat::solve_cones({{strat::e_from_ie(s, ie_total), e_total}});
          TPoly expect = even_poly({1, 1});
          if (solution.at("x") == expect) return true;
          detail = "solved " + solution.at("x").to_string();
          return false;
        });

  // -- reference displays (sheaf moduli on the three surfaces) ---------------

  r.add("delpezzo/pairs-plus-display",
        "wall-crossed pair space polynomial matches the reference display",
        [](std::string& detail) {
          TPoly got = delpezzo::p_m_plus_f1();
          if (got == printed_pairs_plus()) return true;
          detail = diff_detail(got, printed_pairs_plus()) +
                   "; the forgetful-fibration route and intersection-polynomial duality both "
                   "confirm the computed value, so the reference display is internally "
                   "inconsistent by t^8+t^10+t^18+t^20";
          return false;
        });

  r.add("delpezzo/f1-poincare", "virtual Poincare polynomial of the F1 moduli space",
        [](std::string& detail) {
          TPoly got = delpezzo::p_m_f1();
          if (got == printed_p_f1()) return true;
          detail = diff_detail(got, printed_p_f1());
          return false;
        });

  r.add("delpezzo/f1-intersection", "intersection polynomial of the F1 moduli space",
        [](std::string& detail) {
          TPoly got = delpezzo::ip_m_f1();
          if (got == printed_ip_f1()) return true;
          detail = diff_detail(got, printed_ip_f1());
          return false;
        });

  r.add("delpezzo/f0-intersection", "intersection polynomial of the F0 moduli space",
        [](std::string& detail) {
          TPoly got = delpezzo::ip_m_f0();
          if (got != printed_ip_f0()) {
            detail = diff_detail(got, printed_ip_f0());
            return false;
          }
          TPoly hilb = p_of(catalog::product(
              proj(7), catalog::product(proj(1), proj(1))));
          if (got != hilb) {
            detail = "disagrees with the relative one-point Hilbert scheme product";
            return false;
          }
          return true;
        });

  r.add("delpezzo/p2-intersection", "intersection polynomial of the plane moduli space",
        [](std::string& detail) {
          TPoly got = delpezzo::ip_m_p2();
          if (got == printed_ip_p2()) return true;
          detail = diff_detail(got, printed_ip_p2());
          return false;
        });

  // -- Euler numbers ----------------------------------------------------------

  r.add("delpezzo/euler-f1", "intersection Euler number 110 on F1", [](std::string& detail) {
    BigInt e = euler_value(delpezzo::ip_m_f1());
    if (e == BigInt(110)) return true;
    detail = "computed " + e.to_string();
    return false;
  });

  r.add("delpezzo/euler-p2", "intersection Euler number 192 on the plane",
        [](std::string& detail) {
          BigInt e = euler_value(delpezzo::ip_m_p2());
          if (e == BigInt(192)) return true;
          detail = "computed " + e.to_string();
          return false;
        });

  r.add_documented("delpezzo/euler-f0-table",
                   "F0 Euler number: computed 32 vs table value 36 (documented discrepancy)",
                   [](std::string& detail) {
                     BigInt e = euler_value(delpezzo::ip_m_f0());
                     detail = "computed " + e.to_string() +
                              ", table prints 36; the displayed polynomial and the product "
                              "identification both give 32";
                     return e == BigInt(32);
                   });

  // -- correction chain between the two sections -----------------------------

  r.add("delpezzo/f1-correction-chain",
        "E minus IE on F1 equals the n=4 singular-strata correction",
        [](std::string& detail) {
          TPoly diff = delpezzo::p_m_f1() - delpezzo::ip_m_f1();
          TPoly corr = kirwan::cone_correction(4);
          if (diff == corr) return true;
          detail = diff_detail(diff, corr);
          return false;
        });

  r.add("strat/n4-cone-solve",
        "n=4 simultaneous 2x2 cone solve returns the quoted pair",
        [](std::string& detail) {
          auto x = strat::ConeValue::unknown("x");
          auto y = strat::ConeValue::unknown("y");
          strat::LinPoly eq1 = kirwan::univrelation_lhs(4, x, y);
          TPoly p4 = p_of(proj(4));
          TPoly sym_minus = p_of(sym2(proj(4))) - p4;
          strat::LinPoly one(TPoly::one());
          strat::LinPoly eq2 =
              strat::LinPoly(p4) * (one - strat::LinPoly::from_cone(x)) +
              strat::LinPoly(sym_minus) * (one - strat::LinPoly::from_cone(y));
          try {
            auto solution = strat::solve_cones(
                {{eq1, kirwan::univrelation_rhs(4)}, {eq2, kirwan::cone_correction(4)}});
            TPoly expect_x = even_poly({1, 0, 1, 0, 1, 0, 1});
            TPoly expect_y = TPoly::constant(BigInt(2));
            if (solution.at("x") == expect_x && solution.at("y") == expect_y) return true;
            detail =
                "x = " + solution.at("x").to_string() + ", y = " + solution.at("y").to_string();
            return false;
          } catch (const CalcError& e) {
            detail = std::string(e.what()) +
                     "; the two equations are proportional with ratio P(P^4)/(1+t^2) by the "
                     "proportionality identity, so every simultaneous solve of this shape is "
                     "rank-deficient; see strat/n4-cone-recovery for the pinned solves";
            return false;
          }
        });

  r.add("strat/n4-cone-recovery",
        "n=4 cone pair satisfies both identities and each pinned solve recovers it",
        [](std::string& detail) {
          TPoly pair_x = even_poly({1, 0, 1, 0, 1, 0, 1});
          TPoly pair_y = TPoly::constant(BigInt(2));
          TPoly rhs = kirwan::univrelation_rhs(4);
          TPoly p4 = p_of(proj(4));
          TPoly sym_minus = p_of(sym2(proj(4))) - p4;

          // both identities hold for the pair
          strat::LinPoly lhs = kirwan::univrelation_lhs(4, strat::ConeValue::known(pair_x),
                                                        strat::ConeValue::known(pair_y));
          bool relation_ok = lhs.constant_part() == rhs;
          TPoly eq2_value = p4 * (TPoly::one() - pair_x) + sym_minus * (TPoly::one() - pair_y);
          bool correction_ok = eq2_value == kirwan::cone_correction(4);

          // pinning one component determines the other with exact divisions
          auto solved_x = strat::solve_cones({{kirwan::univrelation_lhs(
                                                   4, strat::ConeValue::unknown("x"),
                                                   strat::ConeValue::known(pair_y)),
                                               rhs}});
          auto solved_y = strat::solve_cones({{kirwan::univrelation_lhs(
                                                   4, strat::ConeValue::known(pair_x),
                                                   strat::ConeValue::unknown("y")),
                                               rhs}});
          bool recover_ok = solved_x.at("x") == pair_x && solved_y.at("y") == pair_y;

          if (relation_ok && correction_ok && recover_ok) return true;
          detail = std::string("relation ") + (relation_ok ? "ok" : "bad") + ", correction " +
                   (correction_ok ? "ok" : "bad") + ", recovery " + (recover_ok ? "ok" : "bad");
          return false;
        });

  // -- property suites --------------------------------------------------------

  r.add("kirwan/mn-duality", "closed forms are palindromic with positive even coefficients",
        [&](std::string& detail) {
          for (long long n = 2; n <= max_n; ++n) {
            TPoly p = kirwan::ip_mn_closed(n);
            long long top = 8 * n - 6;
            if (!p.is_palindromic(top) || p.coeff(0) != BigInt(1)) {
              detail = "n=" + std::to_string(n);
              return false;
            }
            for (long long e = 0; e <= top; e += 2) {
              if (p.coeff(e) <= BigInt(0)) {
                detail = "n=" + std::to_string(n) + ", degree " + std::to_string(e);
                return false;
              }
            }
          }
          detail = "n=2.." + std::to_string(max_n);
          return true;
        });

  r.add("kirwan/correction-sign",
        "singular-strata correction is nonpositive, vanishes below degree 4",
        [&](std::string& detail) {
          for (long long n = 2; n <= max_n; ++n) {
            TPoly corr = kirwan::cone_correction(n);
            if (!corr.coeff(0).is_zero() || !corr.coeff(2).is_zero()) {
              detail = "n=" + std::to_string(n) + ": nonzero low-degree term";
              return false;
            }
            for (const auto& [e, c] : corr.terms()) {
              if (c > BigInt(0)) {
                detail = "n=" + std::to_string(n) + ": positive coefficient at " +
                         std::to_string(e);
                return false;
              }
            }
            BigInt e_total = euler_value(kirwan::ip_mn_closed(n)) + euler_value(corr);
            if (e_total < BigInt(1)) {
              detail = "n=" + std::to_string(n) + ": Euler value " + e_total.to_string();
              return false;
            }
          }
          detail = "n=2.." + std::to_string(max_n);
          return true;
        });

  r.add("kirwan/sym2-proportionality",
        "(Sym^2 P^n - P^n)(1 - t^4) equals P^n t^4 (1 - t^(2n)) for n <= 20",
        [](std::string& detail) {
          for (long long n = 1; n <= 20; ++n) {
            TPoly lhs = (p_of(sym2(proj(n))) - p_of(proj(n))) * one_minus_tpow(4);
            TPoly rhs = p_of(proj(n)) * TPoly::monomial(BigInt(1), 4) * one_minus_tpow(2 * n);
            if (lhs != rhs) {
              detail = "n=" + std::to_string(n);
              return false;
            }
          }
          return true;
        });

  r.add("catalog/grass-symmetry", "Grassmannian polynomials are symmetric and match Pascal",
        [](std::string& detail) {
          for (long long n = 0; n <= 12; ++n) {
            for (long long k = 0; k <= n; ++k) {
              TPoly g = p_of(grass(k, n));
              if (g != p_of(grass(n - k, n)) || g != qbin_oracle(n, k)) {
                detail = "k=" + std::to_string(k) + ", n=" + std::to_string(n);
                return false;
              }
            }
          }
          return true;
        });

  r.add("catalog/flag13-multinomial",
        "two-step flag polynomial equals the inversion-counting multinomial",
        [](std::string& detail) {
          for (long long m = 4; m <= 12; ++m) {
            if (p_of(catalog::flag13(m)) != qmultinomial_oracle(m)) {
              detail = "m=" + std::to_string(m);
              return false;
            }
          }
          return true;
        });

  r.add("catalog/hilb3f1-goettsche",
        "three-point Hilbert scheme polynomial matches the product-series oracle",
        [](std::string& detail) {
          TPoly oracle = goettsche_q3_oracle();
          TPoly got = p_of(catalog::hilb3_f1());
          if (got == oracle) return true;
          detail = diff_detail(got, oracle);
          return false;
        });

  r.add("delpezzo/f1-riemann-roch",
        "line-bundle cohomology satisfies Riemann-Roch for |m|, |n| <= 10",
        [](std::string& detail) {
          for (long long m = -10; m <= 10; ++m) {
            for (long long n = -10; n <= 10; ++n) {
              delpezzo::DivF1 d{m, n};
              long long chi = delpezzo::f1_cohomology(0, d) - delpezzo::f1_cohomology(1, d) +
                              delpezzo::f1_cohomology(2, d);
              if (chi != delpezzo::f1_chi(d)) {
                detail = "(m,n)=(" + std::to_string(m) + "," + std::to_string(n) + ")";
                return false;
              }
            }
          }
          return true;
        });

  r.add("delpezzo/f1-serre-duality",
        "h^2(m,n) equals h^0(-3-m, -1-n) for |m|, |n| <= 10",
        [](std::string& detail) {
          for (long long m = -10; m <= 10; ++m) {
            for (long long n = -10; n <= 10; ++n) {
              if (delpezzo::f1_cohomology(2, {m, n}) !=
                  delpezzo::f1_cohomology(0, {-3 - m, -1 - n})) {
                detail = "(m,n)=(" + std::to_string(m) + "," + std::to_string(n) + ")";
                return false;
              }
            }
          }
          return true;
        });

  // -- documented n=3 cone example --------------------------------------------

  r.add_documented(
      "strat/n3-example",
      "n=3 cone substitution: printed values miss the relation by t^4 - t^10 "
      "(documented discrepancy), Euler specialization matches",
      [](std::string& detail) {
        auto known_one = strat::ConeValue::known(TPoly::one());
        auto known_quadric = strat::ConeValue::known(even_poly({1, 1}));
        strat::LinPoly lhs = kirwan::univrelation_lhs(3, known_one, known_quadric);
        TPoly rhs = kirwan::univrelation_rhs(3);
        TPoly gap = rhs - lhs.constant_part();
        TPoly expected_gap = TPoly::monomial(BigInt(1), 4) - TPoly::monomial(BigInt(1), 10);
        bool gap_ok = gap == expected_gap;
        bool euler_ok = euler_value(lhs.constant_part()) == euler_value(rhs);

        // solving for the diagonal cone with the quadric cone substituted
        // must surface a non-polynomial witness
        bool witness_ok = false;
        std::string witness;
        try {
          strat::solve_cones({{kirwan::univrelation_lhs(3, strat::ConeValue::unknown("delta"),
                                                        known_quadric),
                               rhs}});
        } catch (const strat::NonPolynomialSolution& e) {
          witness_ok = true;
          witness = "(" + e.numerator().to_string() + ") / (" + e.denominator().to_string() + ")";
        }

        // with the diagonal cone pinned to 1 the other cone is forced to 2
        auto forced = strat::solve_cones(
            {{kirwan::univrelation_lhs(3, known_one, strat::ConeValue::unknown("s")), rhs}});
        bool forced_ok = forced.at("s") == TPoly::constant(BigInt(2));

        detail = "relation gap " + gap.to_string() + "; Euler values " +
                 euler_value(lhs.constant_part()).to_string() + " == " +
                 euler_value(rhs).to_string() + "; diagonal-cone witness " + witness +
                 "; forced second cone " + forced.at("s").to_string();
        return gap_ok && euler_ok && witness_ok && forced_ok;
      });

  std::sort(r.checks.begin(), r.checks.end(),
            [](const Check& a, const Check& b) { return a.id < b.id; });
  return r.checks;
}

int exit_code(const std::vector<Check>& checks) {
  for (const Check& c : checks) {
    if (c.status == Status::Fail) return 1;
  }
  return 0;
}

}  // namespace ihcalc::verify
