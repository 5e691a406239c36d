#include "chroma/matrix.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace chroma {

ExactMatrix matmul(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: dimension mismatch");
  ExactMatrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += a(i, k) * b(k, j);
    }
  return r;
}

ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return r;
}

ExactMatrix conj_transpose(const ExactMatrix& m) {
  ExactMatrix r(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(j, i) = m(i, j).conj();
  return r;
}

ExactMatrix identity_matrix(std::size_t n) {
  ExactMatrix r(n, n);
  for (std::size_t i = 0; i < n; ++i) r(i, i) = 1;
  return r;
}

FloatMatrix to_approx(const ExactMatrix& m) {
  FloatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.data().size(); ++i) r.data()[i] = m.data()[i].to_approx();
  return r;
}

ExactMatrix ket(const std::vector<CycloNum>& entries) {
  ExactMatrix r(entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) r(i, 0) = entries[i];
  return r;
}

ExactMatrix outer(const ExactMatrix& a, const ExactMatrix& b) { return matmul(a, conj_transpose(b)); }

ExactMatrix scale(const ExactMatrix& m, const CycloNum& z) {
  ExactMatrix r = m;
  for (auto& v : r.data()) v *= z;
  return r;
}

ExactMatrix add(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("add: dimension mismatch");
  ExactMatrix r = a;
  for (std::size_t i = 0; i < r.data().size(); ++i) r.data()[i] += b.data()[i];
  return r;
}

bool is_zero(const ExactMatrix& m) {
  for (const auto& v : m.data())
    if (!v.is_zero()) return false;
  return true;
}

bool equal_up_to_scalar(const ExactMatrix& m, const ExactMatrix& n) {
  if (m.rows() != n.rows() || m.cols() != n.cols()) throw std::invalid_argument("equal_up_to_scalar: dimension mismatch");
  std::size_t p = 0;
  while (p < n.data().size() && n.data()[p].is_zero()) ++p;
  if (p == n.data().size()) return is_zero(m);
  const CycloNum& mp = m.data()[p];
  const CycloNum& np = n.data()[p];
  if (mp.is_zero()) return false;
  for (std::size_t i = 0; i < m.data().size(); ++i)
    if (mp * n.data()[i] != np * m.data()[i]) return false;
  return true;
}

bool equal_up_to_scalar(const FloatMatrix& m, const FloatMatrix& n, double tol) {
  if (m.rows() != n.rows() || m.cols() != n.cols()) throw std::invalid_argument("equal_up_to_scalar: dimension mismatch");
  std::size_t p = 0;
  double best = -1;
  for (std::size_t i = 0; i < n.data().size(); ++i)
    if (std::abs(n.data()[i]) > best) {
      best = std::abs(n.data()[i]);
      p = i;
    }
  double m_max = 0;
  for (const auto& v : m.data()) m_max = std::max(m_max, std::abs(v));
  if (best <= tol) return m_max <= tol;
  if (m_max <= tol) return false;
  // Normalise both to unit max-norm, then align by the pivot entry.
  ApproxNum z = m.data()[p] / n.data()[p];
  if (std::abs(z) * best < tol * m_max) return false;
  for (std::size_t i = 0; i < m.data().size(); ++i)
    if (std::abs(m.data()[i] - z * n.data()[i]) > tol * m_max) return false;
  return true;
}

std::string to_string(const ExactMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "  " : "") << m(i, j).to_string();
    os << '\n';
  }
  return os.str();
}

std::string to_string(const FloatMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      char buf[80];
      std::snprintf(buf, sizeof buf, "%.12g%+.12gj", m(i, j).real(), m(i, j).imag());
      os << (j ? "  " : "") << buf;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace chroma
