#include "contactlie/rp.hpp"

#include <algorithm>
#include <sstream>

namespace contactlie {

QMatrix theta_matrix(int p) {
  QMatrix t(std::size_t(2 * p), std::size_t(2 * p));
  for (int b = 0; b < p; ++b) {
    t.at(std::size_t(2 * b), std::size_t(2 * b + 1)) = 1;
    t.at(std::size_t(2 * b + 1), std::size_t(2 * b)) = -1;
  }
  return t;
}

Endo theta_endo(int p, ScalarContext::Ptr ctx) {
  return Endo::from_qmatrix(theta_matrix(p), std::move(ctx));
}

Endo tilde(const Endo& a) {
  if (a.dim != 2) throw DimMismatch("tilde is defined on 2x2 blocks");
  Endo t(2, a.entries[0].context());
  t.at(1, 1) = -a.at(2, 2);
  t.at(1, 2) = a.at(1, 2);
  t.at(2, 1) = a.at(2, 1);
  t.at(2, 2) = -a.at(1, 1);
  return t;
}

bool in_gamma(const GammaLabel& g) {
  int first = -1, last = -1;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] != 0) {
      if (first < 0) first = int(i);
      last = int(i);
    }
  }
  if (first < 0) return false;  // empty
  for (int i = first; i <= last; ++i)
    if (g[std::size_t(i)] == 0) return false;  // hole
  return true;
}

GammaLabel block_pair_label(int p, int upper_block, int lower_block) {
  // pair {I < J}: ones exactly at positions I..J-1 (1-based bit positions)
  int i = std::min(upper_block, lower_block);
  int j = std::max(upper_block, lower_block);
  GammaLabel g(std::size_t(p - 1), 0);
  for (int t = i; t <= j - 1; ++t) g[std::size_t(t - 1)] = 1;
  return g;
}

GammaLabel label_sum(const GammaLabel& a, const GammaLabel& b) {
  GammaLabel r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + b[i]) % 2;
  return r;
}

std::string label_to_string(const GammaLabel& g) {
  std::string s = "(";
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(g[i]);
  }
  return s + ")";
}

std::size_t GradedBasis::total() const {
  std::size_t n = h.size();
  for (const auto& [g, v] : m) n += v.size();
  return n;
}

std::vector<Endo> GradedBasis::all() const {
  std::vector<Endo> out = h;
  for (const auto& [g, v] : m) out.insert(out.end(), v.begin(), v.end());
  return out;
}

namespace {

// writes a 2x2 pattern into block (bi, bj) of a 2p x 2p matrix (blocks 1-based)
void put_block(Endo& a, int bi, int bj, const Endo& blk) {
  for (int r = 1; r <= 2; ++r)
    for (int c = 1; c <= 2; ++c) a.at(2 * (bi - 1) + r, 2 * (bj - 1) + c) = blk.at(r, c);
}

Endo elementary2(int r, int c, ScalarContext::Ptr ctx) {
  Endo e(2, ctx);
  e.at(r, c) = Scalar::one(ctx);
  return e;
}

}  // namespace

GradedBasis rp_basis(int p, ScalarContext::Ptr ctx) {
  if (p < 1) throw ScalarError("rp_basis: p must be >= 1");
  GradedBasis basis;
  basis.p = p;
  const int n = 2 * p;
  // h: traceless 2x2 in each diagonal block (X, H, Y per block)
  for (int b = 1; b <= p; ++b) {
    Endo x(2, ctx), h(2, ctx), y(2, ctx);
    x.at(1, 2) = Scalar::one(ctx);
    y.at(2, 1) = Scalar::one(ctx);
    h.at(1, 1) = Scalar::one(ctx);
    h.at(2, 2) = -Scalar::one(ctx);
    for (const Endo& blk : {x, h, y}) {
      Endo a(n, ctx);
      put_block(a, b, b, blk);
      basis.h.push_back(a);
    }
  }
  // m: for each block pair I < J, the four elementary patterns M in (I,J)
  // paired with tilde(M) in (J,I)
  for (int i = 1; i <= p; ++i)
    for (int j = i + 1; j <= p; ++j) {
      GammaLabel label = block_pair_label(p, i, j);
      std::vector<Endo> elems;
      for (int r = 1; r <= 2; ++r)
        for (int c = 1; c <= 2; ++c) {
          Endo blk = elementary2(r, c, ctx);
          Endo a(n, ctx);
          put_block(a, i, j, blk);
          put_block(a, j, i, tilde(blk));
          elems.push_back(a);
        }
      basis.m.emplace(std::move(label), std::move(elems));
    }
  return basis;
}

bool is_in_rp(const Endo& a, int p) {
  if (a.dim != 2 * p) throw DimMismatch("is_in_rp: matrix must be 2p x 2p");
  Endo theta = theta_endo(p, a.entries[0].context());
  return (a.transposed() * theta + theta * a).is_zero();
}

BlockReport check_block_shape(const Endo& a, int p) {
  BlockReport report;
  auto block = [&](int bi, int bj) {
    Endo blk(2, a.entries[0].context());
    for (int r = 1; r <= 2; ++r)
      for (int c = 1; c <= 2; ++c) blk.at(r, c) = a.at(2 * (bi - 1) + r, 2 * (bj - 1) + c);
    return blk;
  };
  for (int b = 1; b <= p; ++b) {
    Scalar tr = block(b, b).trace();
    if (!tr.is_zero()) {
      report.ok = false;
      report.nonzero_traces.emplace_back(b, tr);
    }
  }
  for (int i = 1; i <= p; ++i)
    for (int j = i + 1; j <= p; ++j) {
      Endo defect = block(j, i) - tilde(block(i, j));
      if (!defect.is_zero()) {
        report.ok = false;
        report.tilde_defects.push_back({{j, i}, defect});
      }
    }
  return report;
}

std::vector<Endo> r0p_basis(int p, ScalarContext::Ptr ctx) {
  if (p < 1) throw ScalarError("r0p_basis: p must be >= 1");
  const int n = 2 * p;
  const std::size_t nn = std::size_t(n) * std::size_t(n);
  // Linear conditions on the n^2 entries: the Theta condition, zero first
  // column, zero second row.
  QMatrix theta = theta_matrix(p);
  std::vector<QVec> rows;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      // (A^t Theta + Theta A)_{rc} = sum_k A_{kr} Theta_{kc} + sum_k Theta_{rk} A_{kc}
      QVec row(nn, Rational(0));
      for (int k = 0; k < n; ++k) {
        row[std::size_t(k) * n + std::size_t(r)] += theta.at(std::size_t(k), std::size_t(c));
        row[std::size_t(k) * n + std::size_t(c)] += theta.at(std::size_t(r), std::size_t(k));
      }
      rows.push_back(std::move(row));
    }
  for (int k = 0; k < n; ++k) {
    QVec col(nn, Rational(0));
    col[std::size_t(k) * n + 0] = 1;  // first column zero
    rows.push_back(col);
    QVec row2(nn, Rational(0));
    row2[1 * std::size_t(n) + std::size_t(k)] = 1;  // second row zero
    rows.push_back(std::move(row2));
  }
  QMatrix sys(rows.size(), nn);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < nn; ++j) sys.at(i, j) = rows[i][j];
  std::vector<Endo> out;
  for (const auto& v : kernel_basis(sys)) {
    QMatrix m{std::size_t(n), std::size_t(n)};
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) m.at(std::size_t(r), std::size_t(c)) = v[std::size_t(r) * n + std::size_t(c)];
    out.push_back(Endo::from_qmatrix(m, ctx));
  }
  return out;
}

GradingReport check_grading(int p) {
  if (p < 2) throw ScalarError("check_grading: p must be >= 2");
  GradingReport report;
  auto ctx = ScalarContext::make();
  GradedBasis basis = rp_basis(p, ctx);
  const int n = 2 * p;
  const std::size_t nn = std::size_t(n) * std::size_t(n);

  // component name -> span of flattened elements
  struct Component {
    std::string name;
    RowSpace span;
    std::vector<QMatrix> mats;
  };
  std::vector<Component> components;
  auto flatten = [&](const QMatrix& m) {
    QVec v(nn, Rational(0));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) v[std::size_t(r) * n + std::size_t(c)] = m.at(std::size_t(r), std::size_t(c));
    return v;
  };
  {
    Component h{"h", RowSpace(nn), {}};
    for (const auto& e : basis.h) {
      QMatrix q = e.to_qmatrix();
      h.span.insert(flatten(q));
      h.mats.push_back(q);
    }
    components.push_back(std::move(h));
  }
  std::map<GammaLabel, std::size_t> comp_of_label;
  for (const auto& [label, elems] : basis.m) {
    Component c{"m" + label_to_string(label), RowSpace(nn), {}};
    for (const auto& e : elems) {
      QMatrix q = e.to_qmatrix();
      c.span.insert(flatten(q));
      c.mats.push_back(q);
    }
    comp_of_label[label] = components.size();
    components.push_back(std::move(c));
  }

  auto observed_support = [&](const QMatrix& m) {
    QVec target = flatten(m);
    for (const auto& comp : components)
      if (comp.span.contains(target)) return comp.name;  // fully inside one component
    return std::string("mixed");
  };

  struct Tagged {
    std::string name;
    GammaLabel label;  // empty for h
    bool is_h;
    QMatrix mat;
  };
  std::vector<Tagged> all;
  for (std::size_t i = 0; i < basis.h.size(); ++i)
    all.push_back({"h[" + std::to_string(i) + "]", {}, true, basis.h[i].to_qmatrix()});
  for (const auto& [label, elems] : basis.m)
    for (std::size_t i = 0; i < elems.size(); ++i)
      all.push_back({"m" + label_to_string(label) + "[" + std::to_string(i) + "]", label, false,
                     elems[i].to_qmatrix()});

  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = a; b < all.size(); ++b) {
      QMatrix comm = all[a].mat * all[b].mat - all[b].mat * all[a].mat;
      ++report.pairs_checked;
      std::string predicted;
      bool expect_zero = false;
      std::size_t comp_idx = 0;
      if (all[a].is_h && all[b].is_h) {
        predicted = "h";
        comp_idx = 0;
      } else if (all[a].is_h || all[b].is_h) {
        const GammaLabel& l = all[a].is_h ? all[b].label : all[a].label;
        predicted = "m" + label_to_string(l);
        comp_idx = comp_of_label.at(l);
      } else {
        GammaLabel sum = label_sum(all[a].label, all[b].label);
        if (std::all_of(sum.begin(), sum.end(), [](int x) { return x == 0; })) {
          predicted = "h";
          comp_idx = 0;
        } else if (in_gamma(sum)) {
          predicted = "m" + label_to_string(sum);
          comp_idx = comp_of_label.at(sum);
        } else {
          predicted = "0";
          expect_zero = true;
        }
      }
      bool ok;
      if (expect_zero) {
        ok = comm.is_zero();
      } else {
        ok = components[comp_idx].span.contains(flatten(comm));
      }
      if (!ok) {
        report.ok = false;
        report.leaks.push_back(
            {all[a].name, all[b].name, predicted, observed_support(comm)});
      }
    }
  return report;
}

}  // namespace contactlie
