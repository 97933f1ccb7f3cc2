#include "contactlie/families.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "contactlie/detail/family_tables.hpp"
#include "contactlie/rp.hpp"

namespace contactlie {

namespace tables {

namespace {

struct Builder {
  FamilyBuild fb;
  explicit Builder(int dim) {
    fb.dim = dim;
    fb.table.assign(std::size_t(dim) + 1, {});
  }
  void t(int k, int i, int j, const std::string& coeff) { fb.table[std::size_t(k)].push_back({i, j, coeff}); }
  void param(const std::string& name) { fb.params.push_back({name, "", ""}); }
  void param_rel(const std::string& name, const std::string& rel) {
    fb.params.push_back({name, rel, ""});
  }
  void param_recip(const std::string& name, const std::string& partner) {
    fb.params.push_back({name, "", partner});
    fb.params.push_back({partner, "", name});
  }
  // canonical d omega_1 (and optionally d omega_2) on 2p+1 coordinates
  void darboux_row(int k, int p) {
    for (int i = 1; i <= p; ++i) t(k, 2 * i, 2 * i + 1, "1");
  }
  // the standard diagonal pair lines for (e_2i, e_2i+1):
  //   d w_2i   = ( l (w1 - w2) + d w3 ) ^ w_2i
  //   d w_2i+1 = ( -l (w1 - w2) + (-1 - d) w3 ) ^ w_2i+1
  void diag_pair(int i, const std::string& lam, const std::string& dd,
                 const std::string& dd_opp) {
    t(2 * i, 1, 2 * i, lam);
    t(2 * i, 2, 2 * i, "-(" + lam + ")");
    t(2 * i, 3, 2 * i, dd);
    t(2 * i + 1, 1, 2 * i + 1, "-(" + lam + ")");
    t(2 * i + 1, 2, 2 * i + 1, lam);
    t(2 * i + 1, 3, 2 * i + 1, dd_opp);
  }
};

std::string lam(int i) { return "lambda" + std::to_string(i); }
std::string dpar(int i) { return "d" + std::to_string(i); }

}  // namespace

FamilyBuild dim3_heisenberg() {
  Builder b(3);
  b.t(1, 2, 3, "1");
  b.fb.expected_rank = 0;
  b.fb.expected_f_rank = 0;
  return b.fb;
}

FamilyBuild dim3_simple() {
  Builder b(3);
  b.param("a");
  b.param("b");
  b.param("c");
  b.t(1, 2, 3, "1");
  b.t(2, 1, 2, "a");
  b.t(2, 1, 3, "b");
  b.t(3, 1, 2, "c");
  b.t(3, 1, 3, "-a");
  b.fb.hypotheses = {"a^2+b*c"};  // the discriminant branch of a simple algebra
  b.fb.expected_f_rank = 2;
  return b.fb;
}

FamilyBuild dim3_nilpotent_f() {
  Builder b(3);
  b.param("c");
  b.t(1, 2, 3, "1");
  b.t(3, 1, 2, "1");
  b.t(3, 2, 3, "c");
  b.fb.expected_f_rank = 1;
  return b.fb;
}

FamilyBuild dim5_A() {
  Builder b(5);
  b.param("lambda4");
  b.param("d4");
  b.darboux_row(1, 2);
  b.t(2, 2, 3, "1");
  b.diag_pair(2, "lambda4", "d4", "-d4");
  b.fb.hypotheses = {"lambda4"};
  b.fb.spectrum_pairs = {"lambda4"};
  b.fb.expected_rank = 1;
  b.fb.expected_f_rank = 2;
  return b.fb;
}

FamilyBuild dim5_B() {
  Builder b(5);
  b.param("lambda4");
  b.param("d4");
  b.darboux_row(1, 2);
  b.darboux_row(2, 2);
  b.diag_pair(2, "lambda4", "d4", "-1-d4");
  b.fb.hypotheses = {"lambda4"};
  b.fb.spectrum_pairs = {"lambda4"};
  b.fb.expected_rank = 1;
  b.fb.frobenius = true;
  b.fb.expected_f_rank = 2;
  return b.fb;
}

FamilyBuild dim5_remark_a2_1(bool printed) {
  if (!printed) return dim5_B();
  // printed: the w3-coefficient of d w4 duplicates the w5 line's (-1-d4), and
  // the d w5 line carries +lambda4 w1 (against the eigenvalue pairing); the
  // out-of-range w6 is read as w5.
  Builder b(5);
  b.param("lambda4");
  b.param("d4");
  b.darboux_row(1, 2);
  b.darboux_row(2, 2);
  b.t(4, 1, 4, "lambda4");
  b.t(4, 2, 4, "-lambda4");
  b.t(4, 3, 4, "-1-d4");
  b.t(5, 1, 5, "lambda4");
  b.t(5, 2, 5, "lambda4");
  b.t(5, 3, 5, "-1-d4");
  b.fb.hypotheses = {"lambda4"};
  return b.fb;
}

FamilyBuild dim5_remark_a2_0(bool printed) {
  if (!printed) return dim5_A();
  Builder b(5);
  b.param("lambda4");
  b.param("d4");
  b.darboux_row(1, 2);
  b.t(2, 2, 3, "1");
  b.t(4, 1, 4, "lambda4");
  b.t(4, 2, 4, "-lambda4");
  b.t(4, 3, 4, "-1-d4");
  b.t(5, 1, 5, "lambda4");
  b.t(5, 2, 5, "lambda4");
  b.t(5, 3, 5, "-d4");
  b.fb.hypotheses = {"lambda4"};
  return b.fb;
}

FamilyBuild dim5_C() {
  Builder b(5);
  b.darboux_row(1, 2);
  b.t(2, 3, 4, "1");
  b.t(2, 1, 3, "1");
  b.t(3, 3, 5, "1");
  b.t(4, 2, 3, "1");
  b.t(4, 1, 5, "1");
  b.fb.expected_f_rank = 2;
  return b.fb;
}

FamilyBuild dim5_D() {
  Builder b(5);
  b.darboux_row(1, 2);
  b.t(2, 2, 5, "1");
  b.t(2, 3, 4, "-1");
  b.t(2, 1, 3, "1");
  b.t(4, 2, 3, "1");
  b.t(4, 1, 5, "1");
  b.fb.expected_f_rank = 2;
  return b.fb;
}

FamilyBuild dim5_E() {
  Builder b(5);
  b.param_rel("f", "f^2-f-1");
  b.param("l");
  b.darboux_row(1, 2);
  b.t(2, 2, 3, "1");
  b.t(2, 4, 5, "f");
  b.t(2, 1, 3, "1");
  b.t(4, 2, 5, "f");
  b.t(4, 3, 4, "-f");
  b.t(4, 4, 5, "l");
  b.t(4, 1, 5, "1");
  b.fb.expected_f_rank = 2;
  return b.fb;
}

FamilyBuild dim5_F() {
  Builder b(5);
  b.param_rel("f", "f^2-1");
  b.param("l");
  b.darboux_row(1, 2);
  b.t(2, 4, 5, "f");
  b.t(2, 1, 3, "1");
  b.t(4, 2, 5, "f");
  b.t(4, 3, 4, "-f");
  b.t(4, 4, 5, "l");
  b.t(4, 1, 5, "1");
  b.fb.expected_f_rank = 2;
  return b.fb;
}

FamilyBuild dim5_G() {
  Builder b(5);
  b.param("f");
  b.darboux_row(1, 2);
  b.t(2, 2, 5, "1");
  b.t(2, 3, 4, "-1");
  b.t(2, 4, 5, "f");
  b.t(2, 1, 3, "1");
  b.t(4, 2, 3, "1");
  b.t(4, 2, 5, "f");
  b.t(4, 3, 4, "-f");
  b.t(4, 4, 5, "f^2");
  b.t(4, 1, 5, "1");
  b.fb.expected_f_rank = 2;
  return b.fb;
}

FamilyBuild dim5_H(bool printed) {
  Builder b(5);
  b.param("c");
  b.param("f");
  b.param("g");
  b.darboux_row(1, 2);
  b.t(2, 2, 5, "c");
  b.t(3, 2, 3, "2");
  b.t(3, 2, 5, "f");
  b.t(3, 4, 5, "2");
  b.t(4, 2, 3, "c");
  b.t(4, 2, 4, "1");
  b.t(4, 2, 5, "g");
  b.t(4, 3, 5, printed ? "-1/2" : "-1/2-c^2");
  b.t(4, 4, 5, printed ? "c" : "3*c");
  b.t(4, 1, 5, "1");
  b.t(5, 2, 5, "1");
  b.fb.expected_f_rank = 1;
  return b.fb;
}

FamilyBuild dim5_I(bool printed) {
  Builder b(5);
  b.param("c");
  b.param("j");
  b.param("l");
  b.darboux_row(1, 2);
  b.t(2, 2, 3, "-2");
  b.t(2, 3, 5, "j");
  b.t(2, 4, 5, "-2");
  b.t(3, 3, 5, "c");
  b.t(4, 2, 3, "c");
  b.t(4, 2, 5, "c^2+1/2");
  b.t(4, 3, 4, "1");
  b.t(4, 3, 5, "l");
  b.t(4, 4, 5, "3*c");
  b.t(4, 1, 5, "1");
  if (printed)
    b.t(5, 2, 5, "1");
  else
    b.t(5, 3, 5, "1");
  b.fb.expected_f_rank = 1;
  return b.fb;
}

FamilyBuild dim5_J() {
  Builder b(5);
  b.param("j");
  b.param("l");
  b.param("p");
  b.darboux_row(1, 2);
  b.t(2, 2, 3, "1");
  b.t(2, 3, 5, "j");
  b.t(4, 2, 5, "-1");
  b.t(4, 3, 5, "l");
  b.t(4, 4, 5, "p");
  b.t(4, 1, 5, "1");
  b.fb.expected_f_rank = 1;
  return b.fb;
}

FamilyBuild dim5_K(bool printed) {
  Builder b(5);
  b.param("e");
  b.param("f");
  b.param("g");
  b.param("j");
  b.param("l");
  b.darboux_row(1, 2);
  if (printed) {
    b.t(2, 2, 3, "e");
    b.t(2, 3, 5, "j");
    b.t(3, 2, 3, "f");
    b.t(3, 3, 5, "1-e");
    b.t(4, 2, 5, "g");
    b.t(4, 3, 5, "l");
    b.t(4, 1, 5, "1");
  } else {
    b.t(2, 2, 5, "e");
    b.t(2, 3, 5, "j");
    b.t(3, 2, 5, "f");
    b.t(3, 3, 5, "1-e");
    b.t(4, 2, 3, "1");
    b.t(4, 2, 5, "g");
    b.t(4, 3, 5, "l");
    b.t(4, 1, 5, "1");
  }
  b.fb.expected_f_rank = 1;
  return b.fb;
}

FamilyBuild dim5_L() {
  Builder b(5);
  b.param("a");
  b.param_recip("d", "dinv");
  b.param("e");
  b.fb.constraints.push_back({"e", "-dinv"});  // ed + 1 = 0
  b.darboux_row(1, 2);
  b.t(2, 2, 3, "a");
  b.t(2, 3, 4, "e");
  b.t(2, 4, 5, "a");
  b.t(2, 1, 5, "1");
  b.t(4, 3, 4, "-a");
  b.t(4, 2, 5, "d");
  b.t(4, 1, 3, "1");
  b.fb.hypotheses = {"d"};
  b.fb.expected_f_rank = 2;
  return b.fb;
}

FamilyBuild maxrank(int p) {
  Builder b(2 * p + 1);
  for (int i = 2; i <= p; ++i) {
    b.param(lam(2 * i));
    b.param(dpar(2 * i));
  }
  b.darboux_row(1, p);
  b.darboux_row(2, p);
  for (int i = 2; i <= p; ++i)
    b.diag_pair(i, lam(2 * i), dpar(2 * i), "-1-" + dpar(2 * i));
  for (int i = 2; i <= p; ++i) b.fb.hypotheses.push_back(lam(2 * i));
  for (int i = 2; i <= p; ++i) b.fb.spectrum_pairs.push_back(lam(2 * i));
  b.fb.expected_rank = p - 1;
  b.fb.frobenius = true;
  b.fb.expected_f_rank = 2 * p - 2;
  return b.fb;
}

FamilyBuild rank_p2_C(int p, bool printed) {
  Builder b(2 * p + 1);
  b.param("lambda4");
  b.param("lambda6");
  b.param("lambda8");
  b.param("d4");
  b.param("d6");
  b.param("d8");
  b.param("alpha1");
  b.param("beta2");
  for (int i = 5; i <= p; ++i) {
    b.param(lam(2 * i));
    b.param(dpar(2 * i));
  }
  b.fb.constraints.push_back({"lambda8", "lambda4+lambda6"});
  b.fb.constraints.push_back({"d8", "d4+d6"});
  b.darboux_row(1, p);
  b.darboux_row(2, p);
  b.diag_pair(2, "lambda4", "d4", "-1-d4");
  b.t(5, 6, 9, "alpha1+beta2");
  b.diag_pair(3, "lambda6", "d6", "-1-d6");
  b.t(7, 4, 9, "beta2");
  if (printed) {
    // printed d w9 line pairs e_9 with -(lambda4 - lambda6) instead of
    // -(lambda4 + lambda6)
    b.t(8, 1, 8, "lambda8");
    b.t(8, 2, 8, "-lambda8");
    b.t(8, 3, 8, "d8");
    b.t(9, 1, 9, "-(lambda4-lambda6)");
    b.t(9, 2, 9, "lambda4-lambda6");
    b.t(9, 3, 9, "-1-d8");
  } else {
    b.diag_pair(4, "lambda8", "d8", "-1-d8");
  }
  b.t(8, 4, 6, "alpha1");
  for (int i = 5; i <= p; ++i) b.diag_pair(i, lam(2 * i), dpar(2 * i), "-1-" + dpar(2 * i));
  b.fb.hypotheses = {"lambda4", "lambda6"};
  b.fb.spectrum_pairs = {"lambda4", "lambda6", "lambda8"};
  for (int i = 5; i <= p; ++i) {
    b.fb.hypotheses.push_back(lam(2 * i));
    b.fb.spectrum_pairs.push_back(lam(2 * i));
  }
  b.fb.expected_rank = p - 2;
  b.fb.frobenius = true;
  b.fb.expected_f_rank = 2 * p - 2;
  return b.fb;
}

FamilyBuild rank_p2_D(int p, bool printed) {
  Builder b(2 * p + 1);
  b.param("lambda4");
  b.param("lambda6");
  b.param("lambda8");
  b.param("d4");
  b.param("d6");
  b.param("d8");
  b.param("alpha2");
  b.param("alpha3");
  for (int i = 5; i <= p; ++i) {
    b.param(lam(2 * i));
    b.param(dpar(2 * i));
  }
  b.fb.constraints.push_back({"lambda8", "lambda4+lambda6"});
  b.fb.constraints.push_back({"d8", "d4+d6+1"});
  b.darboux_row(1, p);
  b.darboux_row(2, p);
  b.diag_pair(2, "lambda4", "d4", "-1-d4");
  b.t(4, 7, 8, "alpha3");
  b.diag_pair(3, "lambda6", "d6", "-1-d6");
  b.t(6, 5, 8, "alpha2");
  if (printed) {
    b.t(8, 1, 8, "lambda8");
    b.t(8, 2, 8, "lambda8");  // printed "(w1 w2)" read as w1 + w2
    b.t(8, 3, 8, "d8");
    b.t(9, 1, 9, "-(lambda4-lambda6)");
    b.t(9, 2, 9, "-(lambda4-lambda6)");  // printed -(...) (w1 + w2)
    b.t(9, 3, 9, "-1-d8");
  } else {
    b.diag_pair(4, "lambda8", "d8", "-1-d8");
  }
  b.t(9, 5, 7, "alpha3-alpha2");
  for (int i = 5; i <= p; ++i) b.diag_pair(i, lam(2 * i), dpar(2 * i), "-1-" + dpar(2 * i));
  b.fb.hypotheses = {"lambda4", "lambda6"};
  b.fb.spectrum_pairs = {"lambda4", "lambda6", "lambda8"};
  for (int i = 5; i <= p; ++i) {
    b.fb.hypotheses.push_back(lam(2 * i));
    b.fb.spectrum_pairs.push_back(lam(2 * i));
  }
  b.fb.expected_rank = p - 2;
  b.fb.frobenius = true;
  b.fb.expected_f_rank = 2 * p - 2;
  return b.fb;
}

FamilyBuild dim9_frobcore_C(bool printed) {
  // the 8-dimensional frobeniusian core of the first rank-(p-2) family at
  // p = 4, in its own coordinates (the ambient e_2..e_9 relabeled 1..8)
  Builder b(8);
  b.param("d4");
  b.param("d6");
  b.param("d8");
  b.param("alpha1");
  b.param("beta2");
  b.fb.constraints.push_back({"d8", "d4+d6"});
  b.t(1, 1, 2, "1");
  b.t(1, 3, 4, "1");
  if (!printed) b.t(1, 5, 6, "1");  // printed core omits w6 ^ w7 (here w5 ^ w6)
  b.t(1, 7, 8, "1");
  b.t(3, 2, 3, "d4");
  b.t(4, 2, 4, "-1-d4");
  b.t(4, 5, 8, "alpha1+beta2");
  b.t(5, 2, 5, "d6");
  b.t(6, 2, 6, "-1-d6");
  b.t(6, 3, 8, "beta2");
  b.t(7, 2, 7, "d8");
  b.t(7, 3, 5, "alpha1");
  b.t(8, 2, 8, "-1-d8");
  b.fb.is_contact = false;
  b.fb.darboux_expected = false;
  b.fb.frobenius = true;
  return b.fb;
}

FamilyBuild dim9_frobcore_D() {
  Builder b(8);
  b.param("d4");
  b.param("d6");
  b.param("d8");
  b.param("alpha2");
  b.param("alpha3");
  b.fb.constraints.push_back({"d8", "d4+d6+1"});
  b.t(1, 1, 2, "1");
  b.t(1, 3, 4, "1");
  b.t(1, 5, 6, "1");
  b.t(1, 7, 8, "1");
  b.t(3, 2, 3, "d4");
  b.t(3, 6, 7, "alpha3");
  b.t(4, 2, 4, "-1-d4");
  b.t(5, 2, 5, "d6");
  b.t(5, 4, 7, "alpha2");
  b.t(6, 2, 6, "-1-d6");
  b.t(7, 2, 7, "d8");
  b.t(8, 2, 8, "-1-d8");
  b.t(8, 4, 6, "alpha3-alpha2");
  b.fb.is_contact = false;
  b.fb.darboux_expected = false;
  b.fb.frobenius = true;
  return b.fb;
}

FamilyBuild dim11_rank2_a(bool printed) {
  Builder b(11);
  b.param("lambda4");
  b.param("lambda6");
  b.param("lambda8");
  b.param("lambda10");
  b.param("d4");
  b.param("d6");
  b.param("d8");
  b.param("d10");
  b.fb.constraints.push_back({"lambda8", "lambda4+lambda6"});
  b.fb.constraints.push_back({"lambda10", "2*lambda4+lambda6"});
  b.darboux_row(1, 5);
  b.darboux_row(2, 5);
  b.diag_pair(2, "lambda4", "d4", "-1-d4");
  b.diag_pair(3, "lambda6", "d6", "-1-d6");
  if (printed) {
    b.t(8, 1, 8, "lambda8");
    b.t(8, 2, 8, "-lambda8");
    b.t(8, 3, 8, "d8");
    b.t(9, 1, 9, "-(lambda4-lambda6)");
    b.t(9, 2, 9, "lambda4-lambda6");
    b.t(9, 3, 9, "-1-d8");
  } else {
    b.diag_pair(4, "lambda8", "d8", "-1-d8");
  }
  b.diag_pair(5, "lambda10", "d10", "-1-d10");
  b.fb.hypotheses = {"lambda4", "lambda6"};
  b.fb.spectrum_pairs = {"lambda4", "lambda6", "lambda8", "lambda10"};
  b.fb.expected_rank = 2;
  b.fb.frobenius = true;
  b.fb.expected_f_rank = 8;
  return b.fb;
}

FamilyBuild dim11_rank2_b(bool printed) {
  Builder b(11);
  b.param("lambda4");
  b.param("lambda6");
  b.param("lambda8");
  b.param("lambda10");
  b.param("d4");
  b.param("d6");
  b.param("d8");
  b.param("d10");
  b.param("alpha1");
  b.param("beta1");
  b.param("beta5");
  b.fb.constraints.push_back({"lambda8", "lambda4+lambda6"});
  b.fb.constraints.push_back({"lambda10", "2*lambda4+lambda6"});
  b.fb.constraints.push_back({"d8", "d4+d6"});
  if (!printed) b.fb.constraints.push_back({"beta5", "alpha1+beta1"});  // forced by Jacobi
  b.darboux_row(1, 5);
  b.darboux_row(2, 5);
  b.diag_pair(2, "lambda4", "d4", "-1-d4");
  if (printed)
    b.t(5, 5, 9, "beta5");  // printed w5 ^ w9; the pairing needs w6 ^ w9
  else
    b.t(5, 6, 9, "beta5");
  b.diag_pair(3, "lambda6", "d6", "-1-d6");
  b.t(7, 4, 9, "beta1");
  b.diag_pair(4, "lambda8", "d8", "-1-d8");
  b.t(8, 4, 6, "alpha1");
  b.diag_pair(5, "lambda10", "d10", "-1-d10");
  b.fb.hypotheses = {"lambda4", "lambda6"};
  b.fb.spectrum_pairs = {"lambda4", "lambda6", "lambda8", "lambda10"};
  b.fb.expected_rank = 2;
  b.fb.frobenius = true;
  b.fb.expected_f_rank = 8;
  return b.fb;
}

FamilyBuild dim13_rank3_a(bool printed) {
  Builder b(13);
  b.param("lambda4");
  b.param("lambda6");
  b.param("lambda8");
  b.param("lambda10");
  b.param("lambda12");
  for (int i : {4, 6, 8, 10, 12}) b.param(dpar(i));
  b.fb.constraints.push_back({"lambda8", "lambda4+lambda6"});
  b.fb.constraints.push_back({"lambda12", "lambda4+lambda10"});
  b.darboux_row(1, 6);
  b.darboux_row(2, 6);
  b.diag_pair(2, "lambda4", "d4", "-1-d4");
  b.diag_pair(3, "lambda6", "d6", "-1-d6");
  if (printed) {
    b.t(8, 1, 8, "lambda8");
    b.t(8, 2, 8, "-lambda8");
    b.t(8, 3, 8, "d8");
    b.t(9, 1, 9, "-(lambda4-lambda6)");
    b.t(9, 2, 9, "lambda4-lambda6");
    b.t(9, 3, 9, "-1-d8");
  } else {
    b.diag_pair(4, "lambda8", "d8", "-1-d8");
  }
  b.diag_pair(5, "lambda10", "d10", "-1-d10");
  b.diag_pair(6, "lambda12", "d12", "-1-d12");
  b.fb.hypotheses = {"lambda4", "lambda6", "lambda10"};
  b.fb.spectrum_pairs = {"lambda4", "lambda6", "lambda8", "lambda10", "lambda12"};
  b.fb.expected_rank = 3;
  b.fb.frobenius = true;
  b.fb.expected_f_rank = 10;
  return b.fb;
}

FamilyBuild dim13_rank3_b(bool printed) {
  Builder b(13);
  b.param("lambda4");
  b.param("lambda6");
  b.param("lambda8");
  b.param("lambda10");
  b.param("lambda12");
  for (int i : {4, 6, 8, 10, 12}) b.param(dpar(i));
  b.param("alpha46");
  b.param("alpha49");
  b.param("alpha410");
  b.param("alpha413");
  b.fb.constraints.push_back({"lambda8", "lambda4+lambda6"});
  b.fb.constraints.push_back({"lambda12", "lambda4+lambda10"});
  b.fb.constraints.push_back({"d8", "d4+d6"});
  if (!printed) b.fb.constraints.push_back({"d12", "d4+d10"});
  b.darboux_row(1, 6);
  b.darboux_row(2, 6);
  b.diag_pair(2, "lambda4", "d4", "-1-d4");
  b.t(5, 6, 9, "alpha46+alpha49");
  b.t(5, 10, 13, "alpha410+alpha413");
  b.diag_pair(3, "lambda6", "d6", "-1-d6");
  b.t(7, 4, 9, "alpha49");
  if (printed) {
    b.t(8, 1, 8, "lambda8");
    b.t(8, 2, 8, "-lambda8");
    b.t(8, 3, 8, "d8");
    b.t(9, 1, 9, "-(lambda4-lambda6)");
    b.t(9, 2, 9, "lambda4-lambda6");
    b.t(9, 3, 9, "-1-d8");
  } else {
    b.diag_pair(4, "lambda8", "d8", "-1-d8");
  }
  b.t(8, 4, 6, "alpha46");
  b.diag_pair(5, "lambda10", "d10", "-1-d10");
  b.t(11, 4, 13, "alpha413");
  b.diag_pair(6, "lambda12", "d12", "-1-d12");
  b.t(12, 4, 10, "alpha410");
  b.fb.hypotheses = {"lambda4", "lambda6", "lambda10"};
  b.fb.spectrum_pairs = {"lambda4", "lambda6", "lambda8", "lambda10", "lambda12"};
  b.fb.expected_rank = 3;
  b.fb.frobenius = true;
  b.fb.expected_f_rank = 10;
  return b.fb;
}

FamilyBuild example_so3_r2() {
  Builder b(5);
  b.t(1, 2, 3, "1");
  b.t(1, 4, 5, "1");
  b.t(2, 1, 2, "1");
  b.t(2, 2, 4, "1");
  b.t(3, 1, 3, "-1");
  b.t(3, 3, 4, "-1");
  b.t(4, 4, 5, "1");
  b.fb.spectrum_pairs = {"1"};
  b.fb.expected_rank = 1;
  b.fb.expected_f_rank = 2;
  return b.fb;
}

FamilyBuild example_frobenius_ext5(bool printed) {
  // extension of the 4-dimensional frobeniusian model by an outer derivation,
  // in the basis order (Y2, Y1, Y3, Y4, Y5); the contact form is w2 + w5.
  Builder b(5);
  b.param("a1");
  b.param("a2");
  b.param("a3");
  if (printed) {
    // the published structural equations for this example (basis a1..a5):
    // d a1 = a1^a2 + a3^a4, d a2 = 0,
    // d a3 = -1/2 a2^a3 - a1^(a1 a3 + a3 a4),
    // d a4 = -1/2 a2^a4 + a1^(a2 a4 - a2 a5), d a5 = 0
    b.t(1, 1, 2, "1");
    b.t(1, 3, 4, "1");
    b.t(3, 2, 3, "-1/2");
    b.t(3, 1, 3, "-a1");
    b.t(3, 1, 4, "-a3");
    b.t(4, 2, 4, "-1/2");
    b.t(4, 1, 4, "a2");
    b.t(4, 1, 5, "-a2");
    b.fb.is_contact = false;
    b.fb.darboux_expected = false;
    return b.fb;
  }
  b.t(2, 1, 2, "-1");
  b.t(2, 3, 4, "1");
  b.t(3, 1, 3, "-1/2");
  b.t(3, 3, 5, "-a1");
  b.t(3, 4, 5, "-a3");
  b.t(4, 1, 4, "-1/2");
  b.t(4, 3, 5, "-a2");
  b.t(4, 4, 5, "a1");
  b.fb.darboux_expected = false;
  b.fb.reeb_index = 5;
  b.fb.contact_form = {"0", "1", "0", "0", "1"};
  return b.fb;
}

}  // namespace tables

// ----------------------------- catalog -----------------------------

const std::vector<FamilySpec>& catalog() {
  static const std::vector<FamilySpec> families = [] {
    std::vector<FamilySpec> fs;
    auto fixed = [&](const std::string& id, const std::string& summary,
                     FamilyBuild (*build)()) {
      fs.push_back({id, summary, false, 0, 0, [build](int) { return build(); }});
    };
    fixed("dim3.heisenberg", "3-dimensional Heisenberg algebra (phi1 = phi2 = 0)",
          tables::dim3_heisenberg);
    fixed("dim3.simple", "3-dimensional contact algebra, nonzero discriminant branch",
          tables::dim3_simple);
    fixed("dim3.nilpotent-f", "3-dimensional contact algebra with nilpotent f(e2) = e3",
          tables::dim3_nilpotent_f);
    fixed("dim5.A", "5-dimensional diagonal family, d w2 = w2^w3", tables::dim5_A);
    fixed("dim5.B", "5-dimensional diagonal family, frobeniusian extension", tables::dim5_B);
    fixed("dim5.C", "5-dimensional family, f(e3) = e2, f(e5) = e4, d w3 = w3^w5",
          tables::dim5_C);
    fixed("dim5.D", "5-dimensional family, f(e3) = e2, f(e5) = e4, closed w3", tables::dim5_D);
    fixed("dim5.E", "5-dimensional family with the relation f^2 - f - 1 = 0", tables::dim5_E);
    fixed("dim5.F", "5-dimensional family with the relation f^2 - 1 = 0", tables::dim5_F);
    fixed("dim5.G", "5-dimensional family with one free modulus", tables::dim5_G);
    fs.push_back({"dim5.H", "5-dimensional family with d w2 = c w2^w5 (corrected)", false, 0, 0,
                  [](int) { return tables::dim5_H(); }});
    fs.push_back({"dim5.I", "5-dimensional family with d w5 = w3^w5 (corrected)", false, 0, 0,
                  [](int) { return tables::dim5_I(); }});
    fixed("dim5.J", "5-dimensional family, f(e5) = e4, abelian ideal", tables::dim5_J);
    fs.push_back({"dim5.K", "5-dimensional family, last branch of f(e5) = e4 (corrected)",
                  false, 0, 0, [](int) { return tables::dim5_K(); }});
    fixed("dim5.L", "5-dimensional family with the symmetric nilpotent f and ed + 1 = 0",
          tables::dim5_L);
    fs.push_back({"dim5.remark.a2-1",
                  "dimension-5 diagonal model with a2 = 1 (coincides with dim5.B)", false, 0, 0,
                  [](int) { return tables::dim5_remark_a2_1(); }});
    fs.push_back({"dim5.remark.a2-0",
                  "dimension-5 diagonal model with a2 = 0 (coincides with dim5.A)", false, 0, 0,
                  [](int) { return tables::dim5_remark_a2_0(); }});
    fs.push_back({"maxrank.2p+1", "diagonal contact family of maximal rank p-1 (p >= 3)", true,
                  3, 3, tables::maxrank});
    fs.push_back({"rank-p-2.C",
                  "diagonal contact family of rank p-2, first branch (d4+d6-d8 = 0, p >= 4)",
                  true, 4, 4, [](int p) { return tables::rank_p2_C(p); }});
    fs.push_back({"rank-p-2.D",
                  "diagonal contact family of rank p-2, second branch (d4+d6-d8+1 = 0, p >= 4)",
                  true, 4, 4, [](int p) { return tables::rank_p2_D(p); }});
    fs.push_back({"dim9.frobcore.C", "8-dimensional frobeniusian core of rank-p-2.C at p = 4",
                  false, 0, 0, [](int) { return tables::dim9_frobcore_C(); }});
    fs.push_back({"dim9.frobcore.D", "8-dimensional frobeniusian core of rank-p-2.D at p = 4",
                  false, 0, 0, [](int) { return tables::dim9_frobcore_D(); }});
    fs.push_back({"dim11.rank2.a", "11-dimensional diagonal family of rank 2, diagonal branch",
                  false, 0, 0, [](int) { return tables::dim11_rank2_a(); }});
    fs.push_back({"dim11.rank2.b",
                  "11-dimensional diagonal family of rank 2 with alpha terms (d4+d6-d8 = 0)",
                  false, 0, 0, [](int) { return tables::dim11_rank2_b(); }});
    fs.push_back({"dim13.rank3.a", "13-dimensional diagonal family of rank 3, diagonal branch",
                  false, 0, 0, [](int) { return tables::dim13_rank3_a(); }});
    fs.push_back({"dim13.rank3.b",
                  "13-dimensional diagonal family of rank 3 with two constrained triples",
                  false, 0, 0, [](int) { return tables::dim13_rank3_b(); }});
    fs.push_back({"example.so3-r2", "so(3) + r(2): contact form w1, Reeb vector e1, rank-2 f",
                  false, 0, 0, [](int) { return tables::example_so3_r2(); }});
    fs.push_back({"example.frobenius-ext-5",
                  "derivation extension of the 4-dimensional frobeniusian model; contact form "
                  "w2 + w5, not Darboux in this basis",
                  false, 0, 0, [](int) { return tables::example_frobenius_ext5(); }});
    return fs;
  }();
  return families;
}

const FamilySpec* find_family(const std::string& id) {
  for (const auto& f : catalog())
    if (f.id == id) return &f;
  return nullptr;
}

// ----------------------------- building -----------------------------

namespace {

ScalarContext::Ptr make_context(const FamilyBuild& def) {
  std::vector<ParamInfo> infos;
  for (const auto& p : def.params) {
    ParamInfo info;
    info.name = p.name;
    if (!p.relation.empty()) info.relation_tail = parse_relation(p.relation, p.name);
    infos.push_back(std::move(info));
  }
  for (std::size_t i = 0; i < def.params.size(); ++i) {
    if (def.params[i].reciprocal.empty()) continue;
    bool found = false;
    for (std::size_t j = 0; j < def.params.size(); ++j)
      if (def.params[j].name == def.params[i].reciprocal) {
        infos[i].reciprocal_of = int(j);
        found = true;
      }
    if (!found) throw ScalarError("reciprocal partner not declared: " + def.params[i].reciprocal);
  }
  return ScalarContext::make(std::move(infos));
}

std::map<std::string, Scalar> constraint_bindings(const FamilyBuild& def,
                                                  const ScalarContext::Ptr& ctx) {
  std::map<std::string, Scalar> subs;
  for (const auto& [name, expr] : def.constraints) {
    Scalar value = parse_scalar(expr, ctx);
    // let later constraints see earlier eliminations
    value = value.substitute(subs);
    subs[name] = value;
  }
  return subs;
}

}  // namespace

LieAlgebra build_algebra(const FamilyBuild& def, ScalarContext::Ptr& ctx_out,
                         const std::map<std::string, std::string>& bindings,
                         bool enforce_jacobi) {
  auto ctx = make_context(def);
  ctx_out = ctx;
  auto subs = constraint_bindings(def, ctx);
  // user bindings, with reciprocal partners kept consistent
  std::map<std::string, Scalar> user;
  for (const auto& [name, expr] : bindings) {
    if (ctx->index_of(name) < 0) throw ScalarError("unknown parameter in binding: " + name);
    user[name] = parse_scalar(expr, ctx);
  }
  for (const auto& p : def.params) {
    if (p.reciprocal.empty()) continue;
    auto it = user.find(p.name);
    if (it == user.end()) continue;
    if (user.count(p.reciprocal)) continue;
    auto v = it->second.as_rational();
    if (!v) throw ScalarError("reciprocal parameter " + p.name + " needs a rational binding");
    if (*v == 0) throw ScalarError("parameter " + p.name + " must be invertible (nonzero)");
    user[p.reciprocal] = Scalar::constant(1 / *v, ctx);
  }
  // hypothesis guards on numeric bindings
  for (const auto& hyp : def.hypotheses) {
    Scalar value = parse_scalar(hyp, ctx).substitute(subs).substitute(user);
    if (value.is_constant() && value.is_zero())
      throw ScalarError("binding violates the hypothesis " + hyp + " != 0");
  }
  Cochain2 bracket(def.dim, ctx);
  for (int k = 1; k <= def.dim; ++k)
    for (const auto& term : def.table[std::size_t(k)]) {
      Scalar c = parse_scalar(term.coeff, ctx).substitute(subs).substitute(user);
      if (!c.is_zero()) bracket.add(term.i, term.j, k, c);
    }
  return LieAlgebra::make(def.dim, std::move(bracket), ctx, {}, enforce_jacobi);
}

FamilyInstance instantiate(const std::string& id, std::optional<int> p,
                           const std::map<std::string, std::string>& bindings) {
  const FamilySpec* spec = find_family(id);
  if (!spec) throw ScalarError("unknown family id: " + id);
  int pv = 0;
  if (spec->generic_p) {
    pv = p.value_or(spec->default_p);
    if (pv < spec->min_p)
      throw ScalarError("family " + id + " needs p >= " + std::to_string(spec->min_p));
  } else if (p.has_value()) {
    throw ScalarError("family " + id + " has a fixed dimension; -p does not apply");
  }
  FamilyInstance inst;
  inst.id = id;
  inst.def = spec->build(pv);
  inst.p = spec->generic_p ? pv : (inst.def.dim % 2 == 1 ? (inst.def.dim - 1) / 2 : 0);
  inst.algebra = build_algebra(inst.def, inst.ctx, bindings);
  return inst;
}

KForm family_contact_form(const FamilyInstance& inst) {
  const int n = inst.def.dim;
  if (inst.def.contact_form.empty()) return KForm::dual_basis(1, n, inst.ctx);
  KForm omega(n, 1, inst.ctx);
  for (int i = 1; i <= n; ++i) {
    Scalar c = parse_scalar(inst.def.contact_form[std::size_t(i - 1)], inst.ctx);
    if (!c.is_zero()) omega.add({i}, c);
  }
  return omega;
}

// ----------------------------- verification -----------------------------

namespace {

std::vector<std::pair<Scalar, int>> full_spectrum(const FamilyInstance& inst,
                                                  const std::map<std::string, Scalar>& subs) {
  std::vector<std::pair<Scalar, int>> spec;
  for (const auto& expr : inst.def.spectrum_pairs) {
    Scalar lamv = parse_scalar(expr, inst.ctx).substitute(subs);
    spec.emplace_back(lamv, 1);
    spec.emplace_back(-lamv, 1);
  }
  spec.emplace_back(Scalar::zero(inst.ctx), 2);
  return spec;
}

// guard polynomials whose nonvanishing keeps a sample inside the theorem's
// hypotheses and away from accidental eigenvalue relations
std::vector<Scalar> sampling_guards(const FamilyInstance& inst) {
  std::vector<Scalar> guards;
  auto subs = constraint_bindings(inst.def, inst.ctx);
  for (const auto& hyp : inst.def.hypotheses)
    guards.push_back(parse_scalar(hyp, inst.ctx).substitute(subs));
  std::vector<Scalar> lams;
  for (const auto& expr : inst.def.spectrum_pairs)
    lams.push_back(parse_scalar(expr, inst.ctx).substitute(subs));
  for (const auto& l : lams)
    if (!l.is_zero()) guards.push_back(l);
  for (std::size_t i = 0; i < lams.size(); ++i)
    for (std::size_t j = i + 1; j < lams.size(); ++j) {
      Scalar diff = lams[i] - lams[j];
      Scalar sum = lams[i] + lams[j];
      if (!diff.is_zero()) guards.push_back(diff);
      if (!sum.is_zero()) guards.push_back(sum);
    }
  // accidental triple relations s_i l_i + s_j l_j = s_k l_k
  for (std::size_t i = 0; i < lams.size(); ++i)
    for (std::size_t j = i; j < lams.size(); ++j)
      for (std::size_t k = 0; k < lams.size(); ++k) {
        if (k == i || k == j) continue;
        for (int si : {1, -1})
          for (int sj : {1, -1}) {
            if (i == j && si != sj) continue;
            Scalar v = lams[i] * Scalar::constant(si, inst.ctx) +
                       lams[j] * Scalar::constant(sj, inst.ctx) - lams[k];
            if (!v.is_zero()) guards.push_back(v);
          }
      }
  return guards;
}

std::vector<std::string> free_parameters(const FamilyBuild& def) {
  std::vector<std::string> out;
  for (const auto& par : def.params) {
    bool constrained = false;
    for (const auto& [name, expr] : def.constraints)
      if (name == par.name) constrained = true;
    if (constrained) continue;
    if (!par.relation.empty()) continue;       // algebraic parameter, stays symbolic
    if (!par.reciprocal.empty() && par.name > par.reciprocal) continue;  // partner follows
    out.push_back(par.name);
  }
  return out;
}

std::map<std::string, std::string> draw_sample(const FamilyInstance& symbolic_inst,
                                               std::mt19937_64& rng) {
  auto guards = sampling_guards(symbolic_inst);
  auto names = free_parameters(symbolic_inst.def);
  for (int attempt = 0; attempt < 500; ++attempt) {
    std::map<std::string, std::string> bindings;
    std::map<std::string, Scalar> values;
    for (const auto& name : names) {
      Rational v = random_nonzero_rational(rng, 5, 2);
      bindings[name] = rat_to_string(v);
      values[name] = Scalar::constant(v, symbolic_inst.ctx);
      // reciprocal partner follows the sampled value
      int idx = symbolic_inst.ctx->index_of(name);
      const auto& info = symbolic_inst.ctx->param(std::size_t(idx));
      if (info.reciprocal_of >= 0) {
        const std::string& partner =
            symbolic_inst.ctx->param(std::size_t(info.reciprocal_of)).name;
        values[partner] = Scalar::constant(1 / v, symbolic_inst.ctx);
      }
    }
    bool ok = true;
    for (const auto& g : guards) {
      Scalar val = g.substitute(values);
      if (val.is_constant() && val.is_zero()) {
        ok = false;
        break;
      }
    }
    if (ok) return bindings;
  }
  throw ScalarError("could not sample parameters satisfying the hypotheses");
}

// expresses a numeric vector in the frobenius ideal basis (e1+e2, e3, .., en)
std::optional<QVec> in_frob_coords(const Vec& v) {
  if (!v.is_numeric()) return std::nullopt;
  QVec q = v.to_qvec();
  if (q[0] != q[1]) return std::nullopt;  // not in ker(w1 - w2)
  QVec out;
  out.push_back(q[0]);
  for (std::size_t i = 2; i < q.size(); ++i) out.push_back(q[i]);
  return out;
}

CheckResult frobenius_ideal_check(const FamilyInstance& inst) {
  CheckResult r{"frobenius_ideal", CheckStatus::na, ""};
  const LieAlgebra& g = inst.algebra;
  const int n = g.dim();
  if (!g.bracket().is_numeric()) {
    r.detail = "needs a numeric instantiation";
    return r;
  }
  // W = ker(w1 - w2) with basis (e1+e2, e3, ..., en)
  std::vector<Vec> gens;
  gens.push_back(Vec::basis(1, n, inst.ctx) + Vec::basis(2, n, inst.ctx));
  for (int i = 3; i <= n; ++i) gens.push_back(Vec::basis(i, n, inst.ctx));
  Subspace w = Subspace::from_generators(n, gens);
  if (!is_ideal(g, w)) {
    r.status = CheckStatus::fail;
    r.detail = "ker(w1 - w2) is not an ideal";
    return r;
  }
  // induced bracket in W coordinates
  const int m = n - 1;
  Cochain2 induced(m, inst.ctx);
  for (int a = 1; a <= m; ++a)
    for (int b = a + 1; b <= m; ++b) {
      Vec br = g.bracket_of(gens[std::size_t(a - 1)], gens[std::size_t(b - 1)]);
      auto coords = in_frob_coords(br);
      if (!coords) {
        r.status = CheckStatus::fail;
        r.detail = "bracket escapes the ideal";
        return r;
      }
      for (int k = 1; k <= m; ++k)
        if ((*coords)[std::size_t(k - 1)] != 0)
          induced.add(a, b, k, Scalar::constant((*coords)[std::size_t(k - 1)], inst.ctx));
    }
  LieAlgebra core = LieAlgebra::make(m, induced, inst.ctx);
  KForm beta = d_form(core, KForm::dual_basis(1, m, inst.ctx));
  KForm top = wedge_power(beta, m / 2);
  if (top.is_zero()) {
    r.status = CheckStatus::fail;
    r.detail = "top power of the induced 2-form vanishes";
    return r;
  }
  r.status = CheckStatus::ok;
  r.detail = "codimension-1 ideal is frobeniusian";
  return r;
}

CheckResult frobenius_core_check(const FamilyInstance& inst) {
  CheckResult r{"frobenius_core", CheckStatus::na, ""};
  const LieAlgebra& g = inst.algebra;
  if (g.dim() % 2 != 0) return r;
  KForm beta = d_form(g, KForm::dual_basis(1, g.dim(), inst.ctx));
  KForm top = wedge_power(beta, g.dim() / 2);
  r.status = top.is_zero() ? CheckStatus::fail : CheckStatus::ok;
  r.detail = r.status == CheckStatus::ok ? "(d w1)^p is nonzero" : "(d w1)^p vanishes";
  return r;
}

void append(VerificationReport& rep, std::string name, bool ok, std::string detail = "") {
  rep.checks.push_back({std::move(name), ok ? CheckStatus::ok : CheckStatus::fail,
                        std::move(detail)});
}

void append_na(VerificationReport& rep, std::string name, std::string detail = "") {
  rep.checks.push_back({std::move(name), CheckStatus::na, std::move(detail)});
}

void run_symbolic_battery(VerificationReport& rep, const FamilyInstance& inst) {
  const LieAlgebra& g = inst.algebra;
  append(rep, "jacobi", check_jacobi(g.bracket()).ok);
  append(rep, "d_squared", check_d_squared(g).ok);

  if (!inst.def.is_contact) {
    append_na(rep, "darboux", "not a contact algebra (even dimension)");
    append_na(rep, "contact_coefficient");
    rep.checks.push_back(frobenius_core_check(inst));
    return;
  }

  bool darboux = is_darboux(g, 1);
  append(rep, "darboux", darboux == inst.def.darboux_expected,
         inst.def.darboux_expected ? "" : "table declared non-Darboux in this basis");

  Scalar coeff = contact_coefficient(g, family_contact_form(inst));
  append(rep, "contact_coefficient", !coeff.is_zero(),
         coeff.is_zero() ? "coefficient vanishes identically"
                         : "coefficient " + coeff.to_string() +
                               (coeff.is_constant() ? "" : "; vanishes only on its zero locus"));

  if (!inst.def.darboux_expected) {
    append_na(rep, "decompose_roundtrip", "no Darboux normalization in this basis");
    append_na(rep, "eq_system");
    append_na(rep, "f_in_rp");
    append_na(rep, "f_derivation_phi1");
    append_na(rep, "phi1_degree3");
    append_na(rep, "rank_symbolic");
    append_na(rep, "f_singular");
    return;
  }

  ContactDecomposition dec = decompose_contact(g);
  append(rep, "decompose_roundtrip", assemble(dec.parts) == g.bracket());
  FullSystemReport fs = verify_full_system(dec.parts);
  append(rep, "eq_system", fs.ok,
         fs.ok ? "" : "one of the four graded identities has a nonzero residual");
  append(rep, "f_in_rp", check_f_membership(dec.f, dec.p));
  Endo fhat = extend_by_zero(dec.f, dec.dim, inst.ctx);
  append(rep, "f_derivation_phi1", coboundary1(dec.parts.phi1, fhat).is_zero());
  append(rep, "fhat_derivation_mu0", coboundary1(dec.parts.mu0, fhat).is_zero());
  append(rep, "phi1_degree3", check_phi1_degree3_identity(dec).ok);

  if (inst.def.expected_rank >= 0 && !inst.def.spectrum_pairs.empty()) {
    auto subs = constraint_bindings(inst.def, inst.ctx);
    RootData rd = compute_rank(full_spectrum(inst, subs), inst.ctx);
    append(rep, "rank_symbolic", rd.rank == std::size_t(inst.def.expected_rank),
           "rank " + std::to_string(rd.rank) + " from " +
               std::to_string(rd.pair_eigenvalues.size()) + " pairs and " +
               std::to_string(rd.relation_rank) + " independent relations");
  } else if (inst.def.expected_rank == 0) {
    append(rep, "rank_symbolic", true, "rank 0 (no nonzero eigenvalues)");
  } else {
    append_na(rep, "rank_symbolic", "diagonal-section hypotheses do not apply");
  }

  SingularityReport sing = check_f_singular(dec);
  if (dec.p >= 2)
    append(rep, "f_singular", sing.ok, sing.note);
  else
    append_na(rep, "f_singular", "bounds apply for p >= 2 only");
}

void run_sampled_battery(VerificationReport& rep, const FamilyInstance& symbolic_inst,
                         std::uint64_t seed) {
  std::seed_seq seq{seed, std::uint64_t(std::hash<std::string>{}(symbolic_inst.id))};
  std::mt19937_64 rng(seq);
  const int samples = 3;
  bool reeb_ok = true, jc_ok = true, deriv_ok = true, sym_ok = true, ker_ok = true;
  bool rank_ok = true, frob_ok = true, support_ok = true, sing_ok = true, modulo_ok = true;
  bool any_rank = false, any_frob = false, any_support = false, any_sing = false;
  bool any_modulo = false, any_frank = false;
  bool frank_ok = true;
  std::string modulo_detail;
  for (int s = 0; s < samples; ++s) {
    auto bindings = draw_sample(symbolic_inst, rng);
    FamilyInstance inst;
    inst.id = symbolic_inst.id;
    inst.p = symbolic_inst.p;
    inst.def = symbolic_inst.def;
    inst.algebra = build_algebra(inst.def, inst.ctx, bindings);
    const LieAlgebra& g = inst.algebra;

    if (inst.def.is_contact) {
      Vec reeb = reeb_vector(g, family_contact_form(inst));
      reeb_ok = reeb_ok && (reeb == Vec::basis(inst.def.reeb_index, g.dim(), inst.ctx));
    }
    if (!inst.def.is_contact || !inst.def.darboux_expected) continue;

    ContactDecomposition dec = decompose_contact(g);
    // f is numeric in every catalog family (parameters live in phi1 for the
    // algebraic-relation families)
    if (dec.f.is_numeric()) {
      QMatrix fq = dec.f.to_qmatrix();
      auto [fsmat, fnmat] = jordan_chevalley(fq);
      jc_ok = jc_ok && (fsmat + fnmat == fq) && (fsmat * fnmat == fnmat * fsmat) &&
              is_nilpotent(fnmat);
      QPoly mp = min_poly(fsmat);
      jc_ok = jc_ok && poly_gcd(mp, mp.derivative()).degree() == 0;
      auto oracle = jordan_chevalley_split_oracle(fq);
      if (oracle) jc_ok = jc_ok && (*oracle == fsmat);
      sym_ok = sym_ok && spectrum_symmetric(fq);
      if (inst.def.expected_f_rank >= 0) {
        any_frank = true;
        frank_ok = frank_ok && rank(fq) == std::size_t(inst.def.expected_f_rank);
      }
      DerivationReport dr = check_derivation_of_phi1(dec);
      deriv_ok = deriv_ok && dr.ok;
      ker_ok = ker_ok && kernel_subalgebra_closed(dec);
      if (dec.p >= 2) {
        any_sing = true;
        SingularityReport sr = check_f_singular(dec);
        sing_ok = sing_ok && sr.ok;
      }
      if (inst.def.expected_rank >= 0) {
        any_rank = true;
        dec.spectrum.clear();  // force the numeric route
        RootData rd = compute_rank(dec);
        rank_ok = rank_ok && rd.rank == std::size_t(inst.def.expected_rank);
      }
      if (!inst.def.spectrum_pairs.empty()) {
        any_support = true;
        support_ok = support_ok && check_spectral_support(dec);
      }
    }
    if (g.dim() <= 9 && dec.parts.mu0.is_numeric()) {
      any_modulo = true;
      LieModuloReport lm = check_lie_modulo(dec);
      modulo_ok = modulo_ok && lm.cocycle_ok && lm.square_in_b3;
      modulo_detail = lm.phi1_is_coboundary ? "phi1 lies in B^2 at this sample"
                                            : "phi1 is not a coboundary at this sample";
    }
    if (inst.def.frobenius && g.dim() % 2 == 1) {
      any_frob = true;
      CheckResult fr = frobenius_ideal_check(inst);
      frob_ok = frob_ok && fr.status == CheckStatus::ok;
    }
  }
  if (symbolic_inst.def.is_contact)
    append(rep, "reeb_vector", reeb_ok,
           "Reeb vector is e" + std::to_string(symbolic_inst.def.reeb_index));
  if (symbolic_inst.def.is_contact && symbolic_inst.def.darboux_expected) {
    append(rep, "jordan_chevalley_sampled", jc_ok);
    append(rep, "fs_fn_derivations", deriv_ok);
    append(rep, "spectrum_symmetry", sym_ok);
    append(rep, "kernel_subalgebra", ker_ok);
    if (any_frank) append(rep, "f_rank", frank_ok);
    if (any_rank)
      append(rep, "rank_sampled", rank_ok);
    else
      append_na(rep, "rank_sampled");
    if (any_sing) append(rep, "f_singular_sampled", sing_ok);
    if (any_modulo)
      append(rep, "lie_modulo", modulo_ok, modulo_detail);
    else
      append_na(rep, "lie_modulo", "membership solving capped at dimension 9");
    if (any_support) append(rep, "spectral_support", support_ok);
  }
  if (any_frob) append(rep, "frobenius_ideal", frob_ok);
}

}  // namespace

VerificationReport verify_family(const std::string& id, std::optional<int> p,
                                 const std::string& mode, std::uint64_t sample_seed) {
  auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.family = id;
  rep.mode = mode;
  FamilyInstance inst = instantiate(id, p);
  rep.p = inst.p;
  rep.dim = inst.def.dim;
  run_symbolic_battery(rep, inst);
  if (mode == "sampled") run_sampled_battery(rep, inst, sample_seed);
  rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return rep;
}

}  // namespace contactlie
