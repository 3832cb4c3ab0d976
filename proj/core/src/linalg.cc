// Copyright 2026 The pulsec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pulsec/linalg.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <string>

namespace pulsec {

namespace {

constexpr int kMaxJacobiSweeps = 100;
constexpr double kJacobiOffNormStop = 1e-12;
constexpr double kClusterWidth = 1e-8;

void require_same_dim(const ComplexMatrix &a, const ComplexMatrix &b, const char *op) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument(
            std::string(op) + ": dimension mismatch (" + std::to_string(a.dim()) + " vs " +
            std::to_string(b.dim()) + ")");
    }
}

double off_diagonal_norm(const ComplexMatrix &m) {
    double acc = 0;
    for (size_t r = 0; r < m.dim(); r++) {
        for (size_t c = 0; c < m.dim(); c++) {
            if (r != c) {
                acc += std::norm(m(r, c));
            }
        }
    }
    return std::sqrt(acc);
}

}  // namespace

ComplexMatrix::ComplexMatrix(size_t dim) : dim_(dim), data_(dim * dim) {
}

ComplexMatrix::ComplexMatrix(size_t dim, std::vector<Complex> entries)
    : dim_(dim), data_(std::move(entries)) {
    if (data_.size() != dim * dim) {
        throw std::invalid_argument("ComplexMatrix: expected " + std::to_string(dim * dim) +
                                    " entries, got " + std::to_string(data_.size()));
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()) {
    data_.reserve(dim_ * dim_);
    for (const auto &row : rows) {
        if (row.size() != dim_) {
            throw std::invalid_argument("ComplexMatrix: rows must form a square matrix");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(size_t dim) {
    ComplexMatrix m(dim);
    for (size_t k = 0; k < dim; k++) {
        m(k, k) = 1;
    }
    return m;
}

ComplexMatrix ComplexMatrix::zeros(size_t dim) {
    return ComplexMatrix(dim);
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
    ComplexMatrix m(diag.size());
    for (size_t k = 0; k < diag.size(); k++) {
        m(k, k) = diag[k];
    }
    return m;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    require_same_dim(*this, other, "operator+");
    for (size_t k = 0; k < data_.size(); k++) {
        data_[k] += other.data_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    require_same_dim(*this, other, "operator-");
    for (size_t k = 0; k < data_.size(); k++) {
        data_[k] -= other.data_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scale) {
    for (auto &x : data_) {
        x *= scale;
    }
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    return multiply(a, b);
}

Complex ComplexMatrix::trace() const {
    Complex t = 0;
    for (size_t k = 0; k < dim_; k++) {
        t += (*this)(k, k);
    }
    return t;
}

std::ostream &operator<<(std::ostream &out, const ComplexMatrix &m) {
    for (size_t r = 0; r < m.dim(); r++) {
        for (size_t c = 0; c < m.dim(); c++) {
            out << (c ? " " : "") << m(r, c);
        }
        out << "\n";
    }
    return out;
}

ComplexMatrix multiply(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "multiply");
    size_t n = a.dim();
    ComplexMatrix out(n);
    for (size_t r = 0; r < n; r++) {
        for (size_t k = 0; k < n; k++) {
            Complex ark = a(r, k);
            if (ark == Complex{0, 0}) {
                continue;
            }
            for (size_t c = 0; c < n; c++) {
                out(r, c) += ark * b(k, c);
            }
        }
    }
    return out;
}

ComplexMatrix adjoint(const ComplexMatrix &m) {
    ComplexMatrix out(m.dim());
    for (size_t r = 0; r < m.dim(); r++) {
        for (size_t c = 0; c < m.dim(); c++) {
            out(c, r) = std::conj(m(r, c));
        }
    }
    return out;
}

ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b) {
    size_t na = a.dim();
    size_t nb = b.dim();
    ComplexMatrix out(na * nb);
    for (size_t ra = 0; ra < na; ra++) {
        for (size_t ca = 0; ca < na; ca++) {
            Complex s = a(ra, ca);
            for (size_t rb = 0; rb < nb; rb++) {
                for (size_t cb = 0; cb < nb; cb++) {
                    out(ra * nb + rb, ca * nb + cb) = s * b(rb, cb);
                }
            }
        }
    }
    return out;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "max_abs_diff");
    double worst = 0;
    auto ea = a.entries();
    auto eb = b.entries();
    for (size_t k = 0; k < ea.size(); k++) {
        worst = std::max(worst, std::abs(ea[k] - eb[k]));
    }
    return worst;
}

bool is_unitary(const ComplexMatrix &m, double tol) {
    return max_abs_diff(m * adjoint(m), ComplexMatrix::identity(m.dim())) < tol;
}

bool is_hermitian(const ComplexMatrix &m, double tol) {
    return max_abs_diff(m, adjoint(m)) < tol;
}

HermitianEigen eig_hermitian(const ComplexMatrix &h, double tol) {
    if (!is_hermitian(h, tol)) {
        throw std::invalid_argument("eig_hermitian: matrix is not Hermitian");
    }
    size_t n = h.dim();
    ComplexMatrix a = h;
    ComplexMatrix v = ComplexMatrix::identity(n);

    int sweep = 0;
    while (off_diagonal_norm(a) >= kJacobiOffNormStop) {
        if (sweep++ >= kMaxJacobiSweeps) {
            throw ConvergenceError("eig_hermitian: Jacobi sweeps did not converge");
        }
        for (size_t p = 0; p + 1 < n; p++) {
            for (size_t q = p + 1; q < n; q++) {
                Complex apq = a(p, q);
                double mag = std::abs(apq);
                if (mag < 1e-300) {
                    continue;
                }
                // Phase q so the (p,q) entry becomes real, then apply a real rotation.
                Complex d = std::conj(apq) / mag;
                double tau = (a(q, q).real() - a(p, p).real()) / (2 * mag);
                double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1 + tau * tau));
                double c = 1 / std::sqrt(1 + t * t);
                double s = t * c;
                Complex gpp = c;
                Complex gpq = s;
                Complex gqp = -s * d;
                Complex gqq = c * d;

                for (size_t k = 0; k < n; k++) {
                    Complex akp = a(k, p);
                    Complex akq = a(k, q);
                    a(k, p) = akp * gpp + akq * gqp;
                    a(k, q) = akp * gpq + akq * gqq;
                }
                for (size_t k = 0; k < n; k++) {
                    Complex apk = a(p, k);
                    Complex aqk = a(q, k);
                    a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
                    a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
                }
                a(p, q) = 0;
                a(q, p) = 0;
                for (size_t k = 0; k < n; k++) {
                    Complex vkp = v(k, p);
                    Complex vkq = v(k, q);
                    v(k, p) = vkp * gpp + vkq * gqp;
                    v(k, q) = vkp * gpq + vkq * gqq;
                }
            }
        }
    }

    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t x, size_t y) { return a(x, x).real() < a(y, y).real(); });

    HermitianEigen out{std::vector<double>(n), ComplexMatrix(n)};
    for (size_t k = 0; k < n; k++) {
        out.values[k] = a(order[k], order[k]).real();
        for (size_t r = 0; r < n; r++) {
            out.vectors(r, k) = v(r, order[k]);
        }
    }
    return out;
}

EigenDecomposition eig_unitary(const ComplexMatrix &u, double tol) {
    if (!is_unitary(u, tol)) {
        throw std::invalid_argument("eig_unitary: matrix is not unitary within tolerance");
    }
    size_t n = u.dim();
    ComplexMatrix ud = adjoint(u);
    ComplexMatrix re_part = (u + ud) * Complex{0.5, 0};
    ComplexMatrix im_part = (u - ud) * Complex{0, -0.5};

    HermitianEigen first = eig_hermitian(re_part, tol);
    ComplexMatrix basis = first.vectors;

    size_t start = 0;
    while (start < n) {
        size_t end = start + 1;
        while (end < n && first.values[end] - first.values[end - 1] < kClusterWidth) {
            end++;
        }
        size_t m = end - start;
        if (m > 1) {
            // Restrict the imaginary part to the cluster and rotate within it.
            ComplexMatrix restricted(m);
            for (size_t i = 0; i < m; i++) {
                for (size_t j = 0; j < m; j++) {
                    Complex acc = 0;
                    for (size_t r = 0; r < n; r++) {
                        Complex row_acc = 0;
                        for (size_t c = 0; c < n; c++) {
                            row_acc += im_part(r, c) * basis(c, start + j);
                        }
                        acc += std::conj(basis(r, start + i)) * row_acc;
                    }
                    restricted(i, j) = acc;
                }
            }
            restricted = (restricted + adjoint(restricted)) * Complex{0.5, 0};
            HermitianEigen inner = eig_hermitian(restricted, tol);
            std::vector<Complex> rotated(n * m);
            for (size_t r = 0; r < n; r++) {
                for (size_t j = 0; j < m; j++) {
                    Complex acc = 0;
                    for (size_t k = 0; k < m; k++) {
                        acc += basis(r, start + k) * inner.vectors(k, j);
                    }
                    rotated[r * m + j] = acc;
                }
            }
            for (size_t r = 0; r < n; r++) {
                for (size_t j = 0; j < m; j++) {
                    basis(r, start + j) = rotated[r * m + j];
                }
            }
        }
        start = end;
    }

    EigenDecomposition out{std::vector<Complex>(n), adjoint(basis)};
    ComplexMatrix diag = out.transform * u * basis;
    for (size_t k = 0; k < n; k++) {
        out.eigenvalues[k] = diag(k, k);
    }
    return out;
}

ComplexMatrix matrix_exp_hermitian(const ComplexMatrix &h, double tol) {
    if (!is_hermitian(h, tol)) {
        throw std::invalid_argument("matrix_exp_hermitian: matrix is not Hermitian");
    }
    HermitianEigen e = eig_hermitian(h, tol);
    size_t n = h.dim();
    ComplexMatrix scaled = e.vectors;
    for (size_t c = 0; c < n; c++) {
        Complex f = std::polar(1.0, -e.values[c]);
        for (size_t r = 0; r < n; r++) {
            scaled(r, c) *= f;
        }
    }
    return scaled * adjoint(e.vectors);
}

bool dim_to_spins(size_t dim, size_t &num_spins) {
    if (dim == 0 || (dim & (dim - 1)) != 0) {
        return false;
    }
    num_spins = 0;
    while ((size_t{1} << num_spins) < dim) {
        num_spins++;
    }
    return true;
}

}  // namespace pulsec
