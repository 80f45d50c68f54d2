#include "hqt/fock.hpp"

#include <cmath>
#include <numeric>

namespace hqt::fock {

namespace {

// log n! table; plenty for any cutoff we use
constexpr int kMaxFact = 512;
const std::vector<double>& log_fact() {
  static const std::vector<double> table = [] {
    std::vector<double> t(kMaxFact, 0.0);
    for (int n = 1; n < kMaxFact; ++n) t[n] = t[n - 1] + std::log(double(n));
    return t;
  }();
  return table;
}

}  // namespace

int default_cutoff(double alpha) {
  return int(std::ceil(alpha * alpha + 6.0 * alpha + 10.0));
}

State::State(std::vector<Mode> modes, double leakage_bound)
    : m_modes(std::move(modes)), m_leakage_bound(leakage_bound) {
  rebuild_strides();
  Eigen::Index d = 1;
  for (const auto& m : m_modes) d *= m.dim;
  m_amp = Eigen::VectorXcd::Zero(d);
}

State State::vacuum(std::vector<Mode> modes, double leakage_bound) {
  State s(std::move(modes), leakage_bound);
  s.m_amp[0] = 1.0;
  return s;
}

void State::rebuild_strides() {
  m_stride.assign(m_modes.size(), 1);
  for (int i = int(m_modes.size()) - 2; i >= 0; --i)
    m_stride[size_t(i)] = m_stride[size_t(i) + 1] * m_modes[size_t(i) + 1].dim;
}

Eigen::Index State::flat_index(std::span<const int> occ) const {
  Eigen::Index idx = 0;
  for (size_t i = 0; i < m_modes.size(); ++i) idx += occ[i] * m_stride[i];
  return idx;
}

cplx& State::at(std::initializer_list<int> occ) {
  return m_amp[flat_index(std::span<const int>(occ.begin(), occ.size()))];
}

cplx State::at(std::initializer_list<int> occ) const {
  return m_amp[flat_index(std::span<const int>(occ.begin(), occ.size()))];
}

void State::normalize() {
  double n = norm();
  if (n <= 0.0) throw std::runtime_error("cannot normalize zero state");
  m_amp /= n;
}

void State::check_leakage() const {
  if (m_leakage > m_leakage_bound)
    throw TruncationError("truncation leakage " + std::to_string(m_leakage) +
                          " exceeds bound " + std::to_string(m_leakage_bound));
}

void State::apply_phase(int m, double theta) {
  const int d = m_modes[size_t(m)].dim;
  const Eigen::Index stride = m_stride[size_t(m)];
  const Eigen::Index blocks = m_amp.size() / (stride * d);
  for (Eigen::Index blk = 0; blk < blocks; ++blk) {
    for (int n = 0; n < d; ++n) {
      const cplx ph = std::polar(1.0, theta * n);
      const Eigen::Index base = blk * stride * d + n * stride;
      m_amp.segment(base, stride) *= ph;
    }
  }
}

void State::apply_one_mode(int m, const Eigen::MatrixXcd& op) {
  const int d = m_modes[size_t(m)].dim;
  if (op.rows() != d || op.cols() != d)
    throw std::invalid_argument("one-mode operator dimension mismatch");
  const Eigen::Index stride = m_stride[size_t(m)];
  const Eigen::Index blocks = m_amp.size() / (stride * d);
  Eigen::VectorXcd in(d), out(d);
  for (Eigen::Index blk = 0; blk < blocks; ++blk) {
    const Eigen::Index base = blk * stride * d;
    for (Eigen::Index s = 0; s < stride; ++s) {
      for (int n = 0; n < d; ++n) in[n] = m_amp[base + n * stride + s];
      out.noalias() = op * in;
      for (int n = 0; n < d; ++n) m_amp[base + n * stride + s] = out[n];
    }
  }
}

void State::apply_coupler(int m1, int m2, const Eigen::Matrix2cd& u) {
  if (m1 == m2) throw std::invalid_argument("coupler needs distinct modes");
  const int d1 = m_modes[size_t(m1)].dim;
  const int d2 = m_modes[size_t(m2)].dim;
  const auto& lf = log_fact();

  // Fock-space extension of the mode map, truncated to (d1, d2).
  Eigen::MatrixXcd op = Eigen::MatrixXcd::Zero(d1 * d2, d1 * d2);
  for (int n1 = 0; n1 < d1; ++n1) {
    for (int n2 = 0; n2 < d2; ++n2) {
      // (u00 a' + u10 b')^{n1} (u01 a' + u11 b')^{n2} |00> / sqrt(n1! n2!)
      for (int j = 0; j <= n1; ++j) {
        for (int l = 0; l <= n2; ++l) {
          const int o1 = j + l;
          const int o2 = n1 - j + n2 - l;
          if (o1 >= d1 || o2 >= d2) continue;  // clipped -> leakage
          cplx coef = std::pow(u(0, 0), j) * std::pow(u(1, 0), n1 - j) *
                      std::pow(u(0, 1), l) * std::pow(u(1, 1), n2 - l);
          double logw = 0.5 * (lf[size_t(o1)] + lf[size_t(o2)] -
                               lf[size_t(n1)] - lf[size_t(n2)]);
          // binomial choices
          logw += lf[size_t(n1)] - lf[size_t(j)] - lf[size_t(n1 - j)];
          logw += lf[size_t(n2)] - lf[size_t(l)] - lf[size_t(n2 - l)];
          op(o1 * d2 + o2, n1 * d2 + n2) += coef * std::exp(logw);
        }
      }
    }
  }

  const double norm_before = m_amp.squaredNorm();

  // Gather joint-mode blocks, multiply, scatter back.
  const Eigen::Index s1 = m_stride[size_t(m1)];
  const Eigen::Index s2 = m_stride[size_t(m2)];
  std::vector<Eigen::Index> rest_offsets;
  {
    // enumerate flat offsets of all other modes
    std::vector<int> others;
    for (int i = 0; i < mode_count(); ++i)
      if (i != m1 && i != m2) others.push_back(i);
    Eigen::Index count = 1;
    for (int i : others) count *= m_modes[size_t(i)].dim;
    rest_offsets.reserve(size_t(count));
    std::vector<int> occ(others.size(), 0);
    for (Eigen::Index c = 0; c < count; ++c) {
      Eigen::Index off = 0;
      for (size_t i = 0; i < others.size(); ++i)
        off += occ[i] * m_stride[size_t(others[i])];
      rest_offsets.push_back(off);
      for (int i = int(others.size()) - 1; i >= 0; --i) {
        if (++occ[size_t(i)] < m_modes[size_t(others[size_t(i)])].dim) break;
        occ[size_t(i)] = 0;
      }
    }
  }

  Eigen::MatrixXcd block(d1 * d2, Eigen::Index(rest_offsets.size()));
  for (Eigen::Index c = 0; c < block.cols(); ++c) {
    const Eigen::Index off = rest_offsets[size_t(c)];
    for (int n1 = 0; n1 < d1; ++n1)
      for (int n2 = 0; n2 < d2; ++n2)
        block(n1 * d2 + n2, c) = m_amp[off + n1 * s1 + n2 * s2];
  }
  block = op * block;
  for (Eigen::Index c = 0; c < block.cols(); ++c) {
    const Eigen::Index off = rest_offsets[size_t(c)];
    for (int n1 = 0; n1 < d1; ++n1)
      for (int n2 = 0; n2 < d2; ++n2)
        m_amp[off + n1 * s1 + n2 * s2] = block(n1 * d2 + n2, c);
  }

  m_leakage += std::max(0.0, norm_before - m_amp.squaredNorm());
  check_leakage();
}

void State::resize_mode(int m, int new_dim) {
  const int old_dim = m_modes[size_t(m)].dim;
  if (new_dim == old_dim) return;
  std::vector<Mode> modes = m_modes;
  modes[size_t(m)].dim = new_dim;
  State out(std::move(modes), m_leakage_bound);
  out.m_leakage = m_leakage;
  const Eigen::Index stride = m_stride[size_t(m)];
  const Eigen::Index blocks = m_amp.size() / (stride * old_dim);
  const int keep = std::min(old_dim, new_dim);
  for (Eigen::Index blk = 0; blk < blocks; ++blk)
    for (int n = 0; n < keep; ++n)
      out.m_amp.segment(blk * stride * new_dim + n * stride, stride) =
          m_amp.segment(blk * stride * old_dim + n * stride, stride);
  if (new_dim < old_dim) {
    out.m_leakage += std::max(0.0, m_amp.squaredNorm() - out.m_amp.squaredNorm());
  }
  *this = std::move(out);
  check_leakage();
}

void State::remove_definite_mode(int m, int n) {
  std::vector<Mode> modes = m_modes;
  modes.erase(modes.begin() + m);
  State out(std::move(modes), m_leakage_bound);
  out.m_leakage = m_leakage;
  const int d = m_modes[size_t(m)].dim;
  const Eigen::Index stride = m_stride[size_t(m)];
  const Eigen::Index blocks = m_amp.size() / (stride * d);
  for (Eigen::Index blk = 0; blk < blocks; ++blk)
    out.m_amp.segment(blk * stride, stride) =
        m_amp.segment(blk * stride * d + n * stride, stride);
  *this = std::move(out);
}

State tensor(const State& a, const State& b) {
  std::vector<Mode> modes = a.m_modes;
  modes.insert(modes.end(), b.m_modes.begin(), b.m_modes.end());
  State out(std::move(modes),
            std::min(a.m_leakage_bound, b.m_leakage_bound));
  out.m_leakage = a.m_leakage + b.m_leakage;
  for (Eigen::Index i = 0; i < a.m_amp.size(); ++i)
    out.m_amp.segment(i * b.m_amp.size(), b.m_amp.size()) =
        a.m_amp[i] * b.m_amp;
  return out;
}

State permute_modes(const State& s, const std::vector<int>& new_order) {
  std::vector<Mode> modes;
  for (int old : new_order) modes.push_back(s.mode(old));
  State out(std::move(modes), s.leakage_bound());

  const int n = s.mode_count();
  std::vector<Eigen::Index> old_stride(size_t(n), 1);
  for (int i = n - 2; i >= 0; --i)
    old_stride[size_t(i)] = old_stride[size_t(i) + 1] * s.mode(i + 1).dim;
  std::vector<Eigen::Index> new_stride(size_t(n), 1);
  for (int i = n - 2; i >= 0; --i)
    new_stride[size_t(i)] =
        new_stride[size_t(i) + 1] * s.mode(new_order[size_t(i) + 1]).dim;

  std::vector<int> occ(size_t(n), 0);  // occupation in old ordering
  for (Eigen::Index flat = 0; flat < s.dim(); ++flat) {
    Eigen::Index rem = flat;
    for (int i = 0; i < n; ++i) {
      occ[size_t(i)] = int(rem / old_stride[size_t(i)]);
      rem %= old_stride[size_t(i)];
    }
    Eigen::Index ni = 0;
    for (int i = 0; i < n; ++i)
      ni += occ[size_t(new_order[size_t(i)])] * new_stride[size_t(i)];
    out.amplitudes()[ni] = s.amplitudes()[flat];
  }
  return out;
}

State factor_out_modes(const State& s, const std::vector<int>& drop,
                       double tol) {
  std::vector<int> keep;
  for (int i = 0; i < s.mode_count(); ++i)
    if (std::find(drop.begin(), drop.end(), i) == drop.end()) keep.push_back(i);

  std::vector<int> order = keep;
  order.insert(order.end(), drop.begin(), drop.end());
  State perm = permute_modes(s, order);

  Eigen::Index kd = 1, dd = 1;
  for (int m : keep) kd *= s.mode(m).dim;
  for (int m : drop) dd *= s.mode(m).dim;
  Eigen::Map<const Eigen::MatrixXcd> psi(perm.amplitudes().data(), dd, kd);
  // column-major map: rows vary fastest = trailing (dropped) modes
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(psi, Eigen::ComputeThinV);
  const double total = perm.amplitudes().squaredNorm();
  const double principal = svd.singularValues()[0] * svd.singularValues()[0];
  if (total - principal > tol * total)
    throw std::runtime_error("modes do not factor out (relative residual " +
                             std::to_string((total - principal) / total) +
                             ")");

  std::vector<Mode> modes;
  for (int m : keep) modes.push_back(s.mode(m));
  State out(std::move(modes), s.leakage_bound());
  out.amplitudes() = svd.matrixV().col(0).conjugate() * std::sqrt(total);
  return out;
}

cplx State::inner(const State& other) const {
  if (m_amp.size() != other.m_amp.size())
    throw std::invalid_argument("inner: dimension mismatch");
  return m_amp.dot(other.m_amp);  // conjugates *this
}

Eigen::MatrixXcd State::reduced_density(std::span<const int> keep) const {
  Eigen::Index kd = 1;
  for (int m : keep) kd *= m_modes[size_t(m)].dim;
  std::vector<int> rest;
  for (int i = 0; i < mode_count(); ++i) {
    bool kept = false;
    for (int m : keep) kept = kept || (m == i);
    if (!kept) rest.push_back(i);
  }
  Eigen::Index rd = 1;
  for (int i : rest) rd *= m_modes[size_t(i)].dim;

  // psi as (kept x rest) matrix
  Eigen::MatrixXcd psi(kd, rd);
  std::vector<int> kocc(keep.size(), 0), rocc(rest.size(), 0);
  for (Eigen::Index kk = 0; kk < kd; ++kk) {
    Eigen::Index koff = 0;
    for (size_t i = 0; i < keep.size(); ++i)
      koff += kocc[i] * m_stride[size_t(keep[i])];
    std::fill(rocc.begin(), rocc.end(), 0);
    for (Eigen::Index rr = 0; rr < rd; ++rr) {
      Eigen::Index roff = 0;
      for (size_t i = 0; i < rest.size(); ++i)
        roff += rocc[i] * m_stride[size_t(rest[i])];
      psi(kk, rr) = m_amp[koff + roff];
      for (int i = int(rest.size()) - 1; i >= 0; --i) {
        if (++rocc[size_t(i)] < m_modes[size_t(rest[size_t(i)])].dim) break;
        rocc[size_t(i)] = 0;
      }
    }
    for (int i = int(keep.size()) - 1; i >= 0; --i) {
      if (++kocc[size_t(i)] < m_modes[size_t(keep[size_t(i)])].dim) break;
      kocc[size_t(i)] = 0;
    }
  }
  return psi * psi.adjoint();
}

double State::fidelity_with(const State& pure) const {
  cplx ov = pure.inner(*this);
  return std::norm(ov);
}

std::vector<Branch> State::branches_by_occupation(int m) const {
  const int d = m_modes[size_t(m)].dim;
  const Eigen::Index stride = m_stride[size_t(m)];
  const Eigen::Index blocks = m_amp.size() / (stride * d);
  std::vector<Branch> out;
  for (int n = 0; n < d; ++n) {
    State proj(m_modes, m_leakage_bound);
    proj.m_leakage = m_leakage;
    double w = 0.0;
    for (Eigen::Index blk = 0; blk < blocks; ++blk) {
      const Eigen::Index base = blk * stride * d + n * stride;
      proj.m_amp.segment(base, stride) = m_amp.segment(base, stride);
      w += m_amp.segment(base, stride).squaredNorm();
    }
    if (w > 1e-300) {
      proj.m_amp /= std::sqrt(w);
      out.push_back({n, w, std::move(proj)});
    }
  }
  return out;
}

State coherent_state(double alpha, int dim) {
  if (dim <= 0) dim = default_cutoff(alpha) + 1;
  State s({Mode{dim, ModeKind::Coherent}});
  const auto& lf = log_fact();
  const double la = std::log(std::abs(alpha) > 0 ? std::abs(alpha) : 1.0);
  double total = 0.0;
  for (int n = 0; n < dim; ++n) {
    double amp = (alpha == 0.0 && n > 0)
                     ? 0.0
                     : std::exp(-0.5 * alpha * alpha + n * la -
                                0.5 * lf[size_t(n)]);
    if (alpha < 0 && (n % 2 == 1)) amp = -amp;
    s.amplitudes()[n] = amp;
    total += amp * amp;
  }
  // store truncation deficit as leakage
  double miss = std::max(0.0, 1.0 - total);
  if (miss > s.leakage_bound())
    throw TruncationError("coherent state cutoff too small");
  return s;
}

void beam_splitter_50_50(State& s, int m1, int m2) {
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::Matrix2cd u;
  u << r, r, r, -r;
  s.apply_coupler(m1, m2, u);
}

std::vector<Branch> loss_channel(const State& s, int m, double eta) {
  if (eta <= 0.0) return {{0, 1.0, s}};
  State ext = tensor(s, State::vacuum({Mode{s.mode(m).dim, ModeKind::Coherent}}));
  const int anc = ext.mode_count() - 1;
  const double t = std::sqrt(1.0 - eta), r = std::sqrt(eta);
  Eigen::Matrix2cd u;
  u << t, -r, r, t;  // a -> t a + r anc ; anc column irrelevant on vacuum
  ext.apply_coupler(m, anc, u);
  auto branches = ext.branches_by_occupation(anc);
  for (auto& b : branches) b.state.remove_definite_mode(anc, b.key);
  return branches;
}

std::array<double, 3> parity_probs(const State& s, int m) {
  std::array<double, 3> p{0.0, 0.0, 0.0};
  for (const auto& b : s.branches_by_occupation(m)) {
    if (b.key == 0)
      p[0] += b.weight;
    else if (b.key % 2 == 0)
      p[1] += b.weight;
    else
      p[2] += b.weight;
  }
  return p;
}

State project_parity(const State& s, int m, Parity par, double* prob) {
  State out(std::vector<Mode>(), 0);
  bool first = true;
  double w = 0.0;
  for (const auto& b : s.branches_by_occupation(m)) {
    Parity bp = b.key == 0 ? Parity::Zero
                           : (b.key % 2 == 0 ? Parity::EvenNonzero : Parity::Odd);
    if (bp != par) continue;
    if (first) {
      out = b.state;
      out.amplitudes() *= std::sqrt(b.weight);
      first = false;
    } else {
      out.amplitudes() += std::sqrt(b.weight) * b.state.amplitudes();
    }
    w += b.weight;
  }
  if (first) throw std::runtime_error("parity projection has zero support");
  if (prob) *prob = w;
  out.normalize();
  return out;
}

PnpdResult measure_pnpd(const State& s, int m, Rng& rng) {
  auto p = parity_probs(s, m);
  int k = rng.categorical(std::span<const double>(p.data(), 3));
  return {Parity(k), project_parity(s, m, Parity(k))};
}

std::array<double, 2> onoff_probs(const State& s, int m) {
  std::array<double, 2> p{0.0, 0.0};
  for (const auto& b : s.branches_by_occupation(m))
    p[b.key == 0 ? 0 : 1] += b.weight;
  return p;
}

State project_onoff(const State& s, int m, bool click, double* prob) {
  State out(std::vector<Mode>(), 0);
  bool first = true;
  double w = 0.0;
  for (const auto& b : s.branches_by_occupation(m)) {
    if ((b.key != 0) != click) continue;
    if (first) {
      out = b.state;
      out.amplitudes() *= std::sqrt(b.weight);
      first = false;
    } else {
      out.amplitudes() += std::sqrt(b.weight) * b.state.amplitudes();
    }
    w += b.weight;
  }
  if (first) throw std::runtime_error("on/off projection has zero support");
  if (prob) *prob = w;
  out.normalize();
  return out;
}

OnOffResult measure_onoff(const State& s, int m, Rng& rng) {
  auto p = onoff_probs(s, m);
  bool click = rng.uniform() * (p[0] + p[1]) >= p[0];
  return {click, project_onoff(s, m, click)};
}

}  // namespace hqt::fock
