#include "gkm/acceptance.hpp"

#include "gkm/holes.hpp"
#include "gkm/leech.hpp"
#include "gkm/multiplicity.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <map>
#include <sstream>

namespace gkm {

namespace {

using Clock = std::chrono::steady_clock;

template <class T>
std::string str(const T& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

std::string vec_str(const std::vector<long>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

struct Ctx {
  CriterionResult& r;
  void need(bool ok, const std::string& what) {
    if (!ok) {
      r.pass = false;
      r.details.push_back("FAIL " + what);
    }
  }
  void note(const std::string& s) { r.details.push_back(s); }
};

void limit(Ctx& c, Clock::time_point t0, double secs, const std::string& what) {
  double s = std::chrono::duration<double>(Clock::now() - t0).count();
  c.need(s < secs, what + " took " + str(s) + " s, limit " + str(secs) + " s");
}

void residues(Ctx& c) {
  auto t0 = Clock::now();
  for (long N : {2L, 3L, 5L, 7L, 11L, 23L}) {
    long M = leech_M(N);
    auto a = residue_counts(M, N, ResidueMode::ClosedForm);
    auto b = residue_counts(M, N, ResidueMode::Brute);
    auto k = residue_counts(M, N, ResidueMode::Classes);
    for (long r = 0; r < N; ++r) {
      c.need(a.rho_tilde[r] == k.rho_tilde[r], "N=" + str(N) + " r=" + str(r) + " closed " + a.rho_tilde[r].str() +
                                                   " vs class tally " + k.rho_tilde[r].str());
      if (N != 2)
        c.need(a.rho_tilde[r] == b.rho_tilde[r], "N=" + str(N) + " r=" + str(r) + " closed " + a.rho_tilde[r].str() +
                                                     " vs brute " + b.rho_tilde[r].str());
    }
    if (N == 2) c.note("N=2 literal sum-of-squares count " + b.rho_tilde[0].str() + "/" + b.rho_tilde[1].str());
  }
  auto t2 = residue_counts(8, 2, ResidueMode::ClosedForm), t3 = residue_counts(6, 3, ResidueMode::ClosedForm);
  auto t5 = residue_counts(4, 5, ResidueMode::ClosedForm), t7 = residue_counts(3, 7, ResidueMode::ClosedForm);
  c.need(t2.rho_tilde[0] == 136 && t2.rho_tilde[1] == 120, "rho8(.,2) = 136/120");
  c.need(t3.rho_tilde[0] == 225 && t3.rho_tilde[1] == 252 && t3.rho_tilde[2] == 252, "rho6(.,3) = 225/252");
  c.need(t5.rho_tilde[0] == 145, "rho4(0,5) = 145");
  c.need(t7.rho_tilde[0] == 49, "rho3(0,7) = 49");
  limit(c, t0, 1, "residue counts");
}

void theta_identity(Ctx& c) {
  auto t0 = Clock::now();
  auto a = verify_theta_identity(2, 10);
  c.need(a.ok, "N=2 to q^10");
  auto b = verify_theta_identity(3, 8);
  c.need(b.ok, "N=3 to q^8");
  for (auto* rep : {&a, &b})
    if (!rep->ok)
      for (auto& l : rep->lines) c.note(l);
  limit(c, t0, 120, "theta identity");
}

void leading_structure(Ctx& c) {
  auto t0 = Clock::now();
  for (long N : {5L, 7L, 11L, 23L}) {
    long M = leech_M(N);
    auto rep = verify_theta_identity(N, Rational(3, 2));
    c.need(rep.ok, "N=" + str(N) + " modular side vs Golay-projection enumeration");
    QSeries s = theta_sum(N, Rational(3, 2));
    c.need(s.at(0) == 1, "N=" + str(N) + " constant term");
    Rational gap(N - 1, N + 1);
    for (auto& [k, v] : s.terms()) {
      Rational e(k, s.denom());
      if (e > 0 && e <= gap && v != 0) c.need(false, "N=" + str(N) + " nonzero coefficient at q^" + e.str());
    }
    auto rows = enumerate_short_dual_perp(N, 2);
    Rational lead(N - 1, N);
    bool ok = !rows.empty() && rows.front().norm == 2 * lead;
    c.need(ok, "N=" + str(N) + " first dual norm 2(N-1)/N");
    if (!ok) continue;
    c.need(rows.front().mod4_count == 2 * (24 - M),
           "N=" + str(N) + " lambda_q family " + str(rows.front().mod4_count) + " vs 2(24-M) = " + str(2 * (24 - M)));
    c.need(Rational(rows.front().count) == s.at(lead), "N=" + str(N) + " full coefficient at q^" + lead.str());
    c.note("N=" + str(N) + ": coefficient at q^" + lead.str() + " is " + s.at(lead).str() + ", lambda_q family " +
           str(rows.front().mod4_count));
  }
  limit(c, t0, 60, "leading structure");
}

void anchors(Ctx& c) {
  GramLattice e8 = perp_sublattice(find_shape_automorphism(2)).lattice;
  QSeries t = theta_series(GramLattice{e8.dual_gram(), ""}, std::nullopt, 1);
  c.need(t.at(Rational(1, 2)) == 240, "N=2: " + t.at(Rational(1, 2)).str() + " at q^1/2");
  GramLattice k12 = perp_sublattice(find_shape_automorphism(3)).lattice;
  QSeries u = theta_series(GramLattice{k12.dual_gram(), ""}, std::nullopt, 1);
  c.need(u.at(Rational(2, 3)) == 756, "N=3: " + u.at(Rational(2, 3)).str() + " at q^2/3");
}

void fixed_structure(Ctx& c) {
  for (long N : {2L, 3L, 5L, 7L, 11L, 23L}) {
    FixedLattice F = fixed_lattice(N);
    Int want = 1;
    for (long i = 0; i < F.M; ++i) want *= N;
    c.need(F.lattice.det() == Rational(want), "N=" + str(N) + " det " + F.lattice.det().str());
    c.need(minimum_norm(F.lattice) == 4, "N=" + str(N) + " minimum norm");
  }
  GramLattice L = fixed_lattice(11).lattice;
  std::map<Rational, long> census;
  for (auto& v : short_vectors(L, 8)) ++census[v.norm];
  c.need(census[Rational(4)] == 12 && census[Rational(6)] == 12 && census[Rational(8)] == 12, "N=11 census 12/12/12");
  long dual = 0;
  for (auto& v : short_vectors(GramLattice{L.dual_gram(), ""}, Rational(24, 11)))
    dual += v.norm == Rational(24, 11);
  c.need(dual == 72, "N=11 dual vectors of norm 24/11: " + str(dual));
}

using TypeTable = std::map<std::string, std::pair<Rational, long>>;

void holes_check(Ctx& c, long N, const TypeTable& expected, double secs) {
  auto t0 = Clock::now();
  HoleEnumeration e = enumerate_holes(N);
  auto a = volume_audit(e, expected);
  for (auto& d : a.diffs) c.need(false, d);
  c.need(a.total == a.expected, "total " + a.total.str() + " units, expected " + a.expected.str());
  std::ostringstream os;
  Rational f = 1;
  for (long i = 2; i <= 2 * e.M; ++i) f *= i;
  for (auto& t : e.types()) os << t.label << " x" << t.count << " (" << (t.total() / f).str() << ") ";
  c.note(os.str());
  limit(c, t0, secs, "enumeration");
}

void multiplicity_rows(Ctx& c) {
  struct Spot {
    std::string alg;
    std::vector<long> coeffs;
    long mult, bound;  // bound -1: not part of the criterion
    int vs_p = 0;      // +1 strictly above p_{rank-2}, -1 strictly below
  };
  const std::vector<Spot> spots = {
      {"AE3", {2, 2, 1}, 2, -1},          {"AE3", {4, 5, 2}, 11, -1},          {"AE3", {12, 12, 2}, 791, 792},
      {"AE3", {13, 13, 2}, 1253, 1256},   {"AE4", {2, 2, 2, 1}, 5, -1},        {"AE4", {7, 7, 7, 2}, 752, -1},
      {"H71", {1, 1, 1}, 2, 20},          {"AE7", {1, 2, 2, 2, 2, 2, 2}, 20, -1},
      {"T433", {3, 6, 9, 12, 8, 4, 7, 2}, 316, -1, 1},
      {"T433", {2, 6, 10, 14, 9, 4, 9, 4}, 6368, -1, -1},
      {"DE8", {2, 5, 8, 4, 7, 6, 3, 3}, 914, 918}};
  long matched = 0, total = 0;
  for (auto& name : embedding_names()) {
    auto t0 = Clock::now();
    auto e = embedding(name);
    auto golden = golden_rows(name);
    std::vector<std::vector<long>> cs;
    for (auto& g : golden) cs.push_back(g.coeffs);
    for (auto& s : spots)
      if (s.alg == name) cs.push_back(s.coeffs);
    auto rows = mult_rows(e, cs);
    for (std::size_t i = 0; i < golden.size(); ++i) {
      ++total;
      const MultRow& r = rows[i];
      Int b = r.bound ? *r.bound : *r.global;
      if (r.norm == golden[i].norm && r.mult == golden[i].mult && b == golden[i].bound &&
          (golden[i].p_rank < 0 || r.p_rank == golden[i].p_rank))
        ++matched;
      else
        c.note("printed row " + name + " " + vec_str(golden[i].coeffs) + " norm " + str(golden[i].norm) + ": mult " +
               str(golden[i].mult) + " bound " + str(golden[i].bound) + "; computed mult " + r.mult.str() +
               " bound " + b.str() + " p_" + str(e.rank() - 2) + " " + r.p_rank.str());
    }
    for (std::size_t k = golden.size(), j = 0; j < spots.size(); ++j) {
      const Spot& s = spots[j];
      if (s.alg != name) continue;
      const MultRow& r = rows[k++];
      c.need(r.mult == s.mult, name + " " + vec_str(s.coeffs) + " mult " + r.mult.str() + ", expected " + str(s.mult));
      // Cartan-only algebras: the quoted bound is the p_{rank-2} column
      Int b = r.bound ? *r.bound : r.p_rank;
      if (s.bound >= 0) c.need(b == s.bound, name + " " + vec_str(s.coeffs) + " bound " + b.str());
      if (s.vs_p)
        c.need(s.vs_p > 0 ? r.mult > r.p_rank : r.mult < r.p_rank, name + " " + vec_str(s.coeffs) + " vs p_" +
                                                                       str(e.rank() - 2) + " " + r.p_rank.str());
    }
    limit(c, t0, e.rank() <= 4 ? 10 : 600, name);
  }
  c.need(matched >= 20, "at least 20 printed rows reproduced");
  c.note(str(matched) + "/" + str(total) + " printed rows reproduced exactly");
}

void bound_columns(Ctx& c) {
  const long norms[] = {0, -2, -4, -6, -8, -10, -12, -14, -16};
  const std::vector<std::pair<std::string, std::vector<long>>> cols = {
      {"rank 7", {5, 21, 71, 217, 603, 1574, 3880, 9153, 20755}},
      {"rank 8", {6, 28, 105, 350, 1057, 2975, 7883, 19900, 48160}},
      {"G3", {6, 27, 104, 351, 1080, 3107, 8424, 21762, 53976}},
      {"rank 9", {7, 36, 148, 534, 1738, 5240, 14824, 39809, 102223}},
      {"rank 10", {8, 45, 201, 780, 2718, 8730, 26226, 74556, 202180}},
      {"G2", {8, 52, 256, 1122, 4352, 15640, 52224, 165087, 495872}}};
  for (auto& [name, v] : cols)
    for (int i = 0; i < 9; ++i) {
      Int got;
      if (name == "G3")
        got = p_sigma(CycleShape::leech_prime(3), 1 - norms[i] / 2);
      else if (name == "G2")
        got = p_sigma(CycleShape::leech_prime(2), 1 - norms[i] / 2);
      else
        got = global_bound(std::stol(name.substr(5)), norms[i]);
      c.need(got == v[i], name + " at norm " + str(norms[i]) + ": " + got.str() + " vs " + str(v[i]));
    }
}

void consistency(Ctx& c, std::uint64_t seed) {
  for (long N : {2L, 3L, 5L, 7L, 11L, 23L}) {
    long agree = 0;
    for (auto& r : sample_roots(N, 200, seed + N)) agree += gkm_trace_terms(r, N).mult() == Rational(gkm_mult(r, N));
    c.need(agree == 200, "N=" + str(N) + " trace form vs closed form " + str(agree) + "/200");
  }
  for (auto& name : embedding_names()) {
    auto e = embedding(name);
    auto rep = isotropic_mult_check(e, e.rank() <= 4 ? 40 : 24);
    if (!rep.applies) {
      c.note(name + ": no unique affine subdiagram, isotropic check not applicable");
      continue;
    }
    c.need(rep.ok() && rep.rows > 0, name + " isotropic mult " + str(rep.expected) + " on " + str(rep.rows) + " rows");
    for (auto& v : rep.violations) c.note(name + " " + v);
  }
  HoleEnumeration h23 = enumerate_holes(23), h11 = enumerate_holes(11);
  auto ae3 = sharpness_check(embedding("AE3"), h23);
  c.need(ae3.sharp && ae3.consistent(), "AE3 via A1 of A1 N*A1 sharp");
  auto ae4 = sharpness_check(embedding("AE4"), h11);
  c.need(ae4.sharp && ae4.consistent(), "AE4 via A2 N*A2 sharp");
  auto h71 = embedding("H71");
  for (auto& nodes : h71.affine_subdiagrams()) {
    auto v = sharpness_check(h71, h11, nodes);
    c.need(!v.sharp && v.consistent(), "H71 via A1 of A1^2 N*A1^2 not sharp");
  }
}

void covering(Ctx& c) {
  for (long N : {23L, 11L}) {
    auto r = covering_radius_check(N);
    c.need(r.max_radius2 == 2 + Rational(2, N), "N=" + str(N) + " covering radius^2 " + r.max_radius2.str());
    c.need(r.maximizers > 0 && r.maximizers_dual, "N=" + str(N) + " maximizers in R_dual");
  }
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt) {
  const TypeTable n23 = {{"A1 N*A1", {8, 1}}, {"a1^2 N*a1", {10, 2}}, {"a2 N*a1", {9, 2}}};
  const TypeTable n11 = {{"A2 N*A2", {27, 4}},       {"A1^2 N*A1^2", {64, 3}},    {"a3 N*a2", {18, 24}},
                         {"a3 a1 N*a1", {44, 24}},   {"a3 N*a1^2", {16, 12}},     {"a2 a1 N*a2", {21, 12}},
                         {"a2 a1 N*a1^2", {18, 24}}, {"a1^3 N*a1^2", {20, 12}}};
  struct Item {
    int id;
    std::string title;
    bool blocking;
    std::function<void(Ctx&)> run;
  };
  std::vector<Item> items = {
      {1, "residue counts", true, residues},
      {2, "theta identity N=2, N=3", true, theta_identity},
      {3, "leading structure N=5,7,11,23", true, leading_structure},
      {4, "theta anchors 240, 756", true, anchors},
      {5, "fixed-lattice structure", true, fixed_structure},
      {6, "holes N=23", true, [&](Ctx& c) { holes_check(c, 23, n23, 10); }},
      {7, "holes N=11", true, [&](Ctx& c) { holes_check(c, 11, n11, 600); }},
      {8, "holes N=7 (stretch)", false,
       [&](Ctx& c) {
         auto t0 = Clock::now();
         HoleEnumeration e = enumerate_holes(7);
         auto a = volume_audit(e);
         c.need(e.types().size() == 14, str(e.types().size()) + " types, expected 14");
         c.need(a.ok(), "total " + a.total.str() + " units, expected " + a.expected.str());
         c.note(str(std::chrono::duration<double>(Clock::now() - t0).count()) + " s");
       }},
      {9, "multiplicity tables", true, multiplicity_rows},
      {10, "bound columns", true, bound_columns},
      {11, "consistency", true, [&](Ctx& c) { consistency(c, opt.seed); }},
      {12, "covering radius", true, covering},
  };
  std::vector<CriterionResult> out;
  for (auto& it : items) {
    if (!opt.only.empty() && std::find(opt.only.begin(), opt.only.end(), it.id) == opt.only.end()) continue;
    CriterionResult r;
    r.id = it.id;
    r.title = it.title;
    r.blocking = it.blocking;
    r.pass = true;
    Ctx c{r};
    auto t0 = Clock::now();
    try {
      it.run(c);
    } catch (const std::exception& e) {
      c.need(false, std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    if (opt.on_result) opt.on_result(r);
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_line(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.pass ? "[PASS] " : r.blocking ? "[FAIL] " : "[WARN] ") << std::setw(2) << r.id << " " << r.title << " ("
     << std::fixed << std::setprecision(1) << r.seconds << " s)";
  return os.str();
}

bool all_blocking_pass(const std::vector<CriterionResult>& rs) {
  for (auto& r : rs)
    if (r.blocking && !r.pass) return false;
  return true;
}

}  // namespace gkm
