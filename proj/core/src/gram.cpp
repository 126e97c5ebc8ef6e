#include "rieszlab/gram.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <unsupported/Eigen/FFT>

#include "json.hpp"

namespace rieszlab {

namespace {

std::string weighted_tag(const WeightSpec& w, const std::string& base) {
  if (w.is_unit()) return base;
  return "weighted:" + w.describe();
}

}  // namespace

std::string GramMatrix::to_csv() const {
  std::ostringstream os;
  os.precision(17);
  os << "row,col_re_im_interleaved\n";
  for (Eigen::Index j = 0; j < entries.rows(); ++j) {
    os << j;
    for (Eigen::Index k = 0; k < entries.cols(); ++k) {
      os << "," << entries(j, k).real() << "," << entries(j, k).imag();
    }
    os << "\n";
  }
  return os.str();
}

std::string GramMatrix::to_json() const {
  nlohmann::json js;
  js["domain_tag"] = domain_tag;
  js["dim"] = entries.rows();
  js["diagonal_value"] = diagonal_value;
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index j = 0; j < entries.rows(); ++j) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index k = 0; k < entries.cols(); ++k) {
      row.push_back({entries(j, k).real(), entries(j, k).imag()});
    }
    rows.push_back(row);
  }
  js["entries"] = rows;
  return js.dump();
}

GramMatrix GramMatrix::from_json(const std::string& text) {
  const auto js = nlohmann::json::parse(text);
  GramMatrix g;
  g.domain_tag = js.at("domain_tag").get<std::string>();
  g.diagonal_value = js.at("diagonal_value").get<double>();
  const auto& rows = js.at("entries");
  const Eigen::Index n = Eigen::Index(rows.size());
  g.entries.resize(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) {
      const auto& cell = rows.at(std::size_t(j)).at(std::size_t(k));
      g.entries(j, k) = Complex(cell.at(0).get<double>(), cell.at(1).get<double>());
    }
  }
  return g;
}

GramMatrix gram_matrix(const ExponentialSystem& system, const IntervalSet& domain,
                       const WeightSpec& w) {
  const Eigen::Index m = Eigen::Index(system.size());
  GramMatrix g;
  g.domain_tag = weighted_tag(w, "interval_set");
  g.diagonal_value = w.integral(domain);
  g.entries.resize(m, m);

  if (system.progression() && m > 1) {
    // One closed-form evaluation per diagonal.
    const double step = system.progression()->step;
    CVector row(m);
    for (Eigen::Index d = 0; d < m; ++d) {
      row[d] = weighted_ft(domain, w, double(d) * step);
    }
    row[0] = Complex(g.diagonal_value, 0.0);
    for (Eigen::Index j = 0; j < m; ++j) {
      for (Eigen::Index k = j; k < m; ++k) {
        g.entries(j, k) = row[k - j];
        g.entries(k, j) = std::conj(row[k - j]);
      }
    }
    return g;
  }

  for (Eigen::Index j = 0; j < m; ++j) {
    g.entries(j, j) = Complex(g.diagonal_value, 0.0);
    for (Eigen::Index k = j + 1; k < m; ++k) {
      const Complex v = weighted_ft(domain, w, system[std::size_t(k)] - system[std::size_t(j)]);
      g.entries(j, k) = v;
      g.entries(k, j) = std::conj(v);
    }
  }
  return g;
}

GramMatrix gram_matrix(const ExponentialSystem2D& system, const Disk& domain) {
  const Eigen::Index m = Eigen::Index(system.size());
  GramMatrix g;
  g.domain_tag = "disk";
  g.diagonal_value = domain.area();
  g.entries.resize(m, m);
  const auto& f = system.freqs();
  for (Eigen::Index j = 0; j < m; ++j) {
    g.entries(j, j) = Complex(g.diagonal_value, 0.0);
    for (Eigen::Index k = j + 1; k < m; ++k) {
      const double dx = f[std::size_t(k)][0] - f[std::size_t(j)][0];
      const double dy = f[std::size_t(k)][1] - f[std::size_t(j)][1];
      const double q = std::hypot(dx, dy);
      Complex v(disk_indicator_ft(domain.radius, q), 0.0);
      if (domain.center[0] != 0.0 || domain.center[1] != 0.0) {
        v *= unit_phase(dx * domain.center[0] + dy * domain.center[1]);
      }
      g.entries(j, k) = v;
      g.entries(k, j) = std::conj(v);
    }
  }
  return g;
}

// ---------------------------------------------------------------------------
// ToeplitzGram
// ---------------------------------------------------------------------------

struct ToeplitzGram::FftImpl {
  Eigen::FFT<double> fft;
};

ToeplitzGram::ToeplitzGram(const ExponentialSystem& system, const IntervalSet& domain,
                           const WeightSpec& w)
    : fft_(std::make_shared<FftImpl>()) {
  if (!system.progression()) {
    throw std::invalid_argument("ToeplitzGram: frequency list is not an arithmetic progression");
  }
  m_ = Eigen::Index(system.size());
  const double step = system.progression()->step;
  row_.resize(m_);
  for (Eigen::Index d = 0; d < m_; ++d) {
    row_[d] = weighted_ft(domain, w, double(d) * step);
  }
  row_[0] = Complex(w.integral(domain), 0.0);

  fft_n_ = 1;
  while (fft_n_ < 2 * m_ - 1) fft_n_ *= 2;
  // Circulant kernel t with (Gx)_j = sum_k t_{j-k} x_k, t_d = g(-d) = conj(g(d)).
  std::vector<Complex> col(static_cast<std::size_t>(fft_n_), Complex(0.0, 0.0));
  for (Eigen::Index d = 0; d < m_; ++d) col[std::size_t(d)] = std::conj(row_[d]);
  for (Eigen::Index d = 1; d < m_; ++d) col[std::size_t(fft_n_ - d)] = row_[d];
  std::vector<Complex> spec(static_cast<std::size_t>(fft_n_));
  fft_->fft.fwd(spec, col);
  symbol_ = Eigen::Map<CVector>(spec.data(), fft_n_);

  // T. Chan circulant preconditioner of G: c_j = ((m-j) t_j + j t_{j-m}) / m.
  std::vector<Complex> chan(static_cast<std::size_t>(m_), Complex(0.0, 0.0));
  for (Eigen::Index j = 0; j < m_; ++j) {
    Complex v = double(m_ - j) * std::conj(row_[j]);
    if (j > 0) v += double(j) * row_[m_ - j];
    chan[std::size_t(j)] = v / double(m_);
  }
  std::vector<Complex> chan_spec(static_cast<std::size_t>(m_));
  fft_->fft.fwd(chan_spec, chan);
  chan_eigs_.resize(m_);
  double cmin = std::numeric_limits<double>::infinity();
  double cmax = 0.0;
  for (Eigen::Index j = 0; j < m_; ++j) {
    const double ev = chan_spec[std::size_t(j)].real();
    chan_eigs_[j] = Complex(ev, 0.0);
    cmin = std::min(cmin, ev);
    cmax = std::max(cmax, ev);
  }
  chan_ok_ = cmin > 1e-8 * cmax && cmax > 0.0;
}

CVector ToeplitzGram::matvec(const CVector& x) const {
  if (x.size() != m_) throw std::invalid_argument("ToeplitzGram::matvec: size mismatch");
  std::vector<Complex> padded(static_cast<std::size_t>(fft_n_), Complex(0.0, 0.0));
  Eigen::Map<CVector>(padded.data(), m_) = x;
  std::vector<Complex> spec(static_cast<std::size_t>(fft_n_));
  fft_->fft.fwd(spec, padded);
  for (Eigen::Index j = 0; j < fft_n_; ++j) spec[std::size_t(j)] *= symbol_[j];
  std::vector<Complex> out(static_cast<std::size_t>(fft_n_));
  fft_->fft.inv(out, spec);
  return Eigen::Map<CVector>(out.data(), m_);
}

double ToeplitzGram::quadratic_form(const CVector& x) const {
  return matvec(x).dot(x).real();  // dot conjugates its argument: (Gx)^H x = x^H G x
}

CVector ToeplitzGram::solve_cg(const CVector& b, double tol, int max_iter, double ridge,
                               SolveStats* stats) const {
  if (b.size() != m_) throw std::invalid_argument("ToeplitzGram::solve_cg: size mismatch");
  const bool use_pc = chan_ok_;
  auto apply = [&](const CVector& v) -> CVector {
    CVector y = matvec(v);
    if (ridge != 0.0) y += ridge * v;
    return y;
  };
  auto precond = [&](const CVector& r) -> CVector {
    if (!use_pc) return r;
    std::vector<Complex> in(static_cast<std::size_t>(m_));
    Eigen::Map<CVector>(in.data(), m_) = r;
    std::vector<Complex> spec(static_cast<std::size_t>(m_));
    fft_->fft.fwd(spec, in);
    for (Eigen::Index j = 0; j < m_; ++j) {
      spec[std::size_t(j)] /= (chan_eigs_[j].real() + ridge);
    }
    std::vector<Complex> out(static_cast<std::size_t>(m_));
    fft_->fft.inv(out, spec);
    return Eigen::Map<CVector>(out.data(), m_);
  };

  CVector x = CVector::Zero(m_);
  CVector r = b;
  CVector z = precond(r);
  CVector p = z;
  double rz = r.dot(z).real();
  const double nb = b.norm();
  SolveStats st;
  st.preconditioned = use_pc;
  if (nb == 0.0) {
    st.converged = true;
    if (stats) *stats = st;
    return x;
  }
  for (int it = 0; it < max_iter; ++it) {
    const CVector Ap = apply(p);
    const double pAp = p.dot(Ap).real();
    if (!(pAp > 0.0)) break;  // loses positive definiteness at roundoff scale
    const double alpha = rz / pAp;
    x += alpha * p;
    r -= alpha * Ap;
    st.iterations = it + 1;
    st.rel_residual = r.norm() / nb;
    if (st.rel_residual <= tol) {
      st.converged = true;
      break;
    }
    z = precond(r);
    const double rz_new = r.dot(z).real();
    p = z + (rz_new / rz) * p;
    rz = rz_new;
  }
  if (stats) *stats = st;
  return x;
}

CMatrix ToeplitzGram::dense() const {
  CMatrix g(m_, m_);
  for (Eigen::Index j = 0; j < m_; ++j) {
    for (Eigen::Index k = j; k < m_; ++k) {
      g(j, k) = row_[k - j];
      g(k, j) = std::conj(row_[k - j]);
    }
  }
  return g;
}

}  // namespace rieszlab
