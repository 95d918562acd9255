#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "qm/arith.hpp"
#include "qm/etale.hpp"
#include "qm/galoisalg.hpp"
#include "qm/normgroups.hpp"

namespace qm::massey {

enum class Tri { No, Yes, Unknown };
std::string to_string(Tri t);

struct Options {
  long search_bound = 10000;
};

struct MasseyVerdict {
  Tri defined = Tri::Unknown;
  Tri vanishes = Tri::Unknown;
  std::vector<nlohmann::json> certificates;
  std::vector<nlohmann::json> obstructions;
  std::vector<std::string> trace;
  bool decided() const { return defined != Tri::Unknown && vanishes != Tri::Unknown; }
};
nlohmann::json to_json(const MasseyVerdict& v);

// <a,b,c>: a symbol obstruction, or eps in F_{a,c} with a verified U_4-algebra.
MasseyVerdict triple(const Rational& a, const Rational& b, const Rational& c);

// <a,b,c,d> with a d a square, through the membership tests for r, s and t.
struct FourReport {
  MasseyVerdict verdict;
  std::optional<galoisalg::RSTData> rst;
  std::optional<normgroups::Verdict> r_test, s_test, t_test;
};
FourReport four_report(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                       const Options& opt = {});
MasseyVerdict four(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                   const Options& opt = {});
MasseyVerdict four_abca(const Rational& a, const Rational& b, const Rational& c, const Options& opt = {});

// <bc,b,c,bc>: defined iff vanishes iff (b,c) = 0 and -1 is a norm from F_{b,c}.
MasseyVerdict thm13(const Rational& b, const Rational& c, const Options& opt = {});

// xi in F_{b,c} with N(xi) = -f^2 built from conic points for a = bc (b + c = 1).
etale::Element minus_f2_witness(const galoisalg::RSTData& rst);

struct HWReport {
  bool symbols_zero = false;
  bool identities = false;
  int omega3 = 0;
  etale::Element xi;
  Rational xi_norm;
  MasseyVerdict verdict;
  bool ok() const;
};
HWReport hw();
nlohmann::json to_json(const HWReport& r);

// (alpha x, delta y) = 0 and (alpha x, c) = 0 over F_a, for a d a square; b and c are read off the norms of
// alpha and delta.
struct AlphaDeltaResult {
  Tri holds = Tri::Unknown;
  int failed_clause = 0;  // 1: (alpha x, delta y), 2: (alpha x, c)
  Tri clause1 = Tri::Unknown, clause2 = Tri::Unknown;
  std::optional<bool> reduction_agrees;  // clause 2 against x in t N_c N_ac
  std::optional<bool> corestriction_zero;  // (b,y) + (x,c) over Q when clause 1 holds
};
AlphaDeltaResult alpha_delta_condition(const Rational& a, const Rational& d, const etale::Element& alpha,
                                const etale::Element& delta, const Rational& x, const Rational& y);

}  // namespace qm::massey
