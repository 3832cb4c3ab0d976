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

#ifndef PULSEC_LINALG_H
#define PULSEC_LINALG_H

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

namespace pulsec {

using Complex = std::complex<double>;

/// Raised when an iterative eigen-solver exceeds its sweep budget.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dense square complex matrix, row-major. Entry (r, c) is <r|M|c> in the
/// computational basis, where spin 1 is the most significant bit of r and c.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(size_t dim);
    ComplexMatrix(size_t dim, std::vector<Complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(size_t dim);
    static ComplexMatrix zeros(size_t dim);
    static ComplexMatrix diagonal(std::span<const Complex> diag);

    size_t dim() const {
        return dim_;
    }
    Complex &operator()(size_t r, size_t c) {
        return data_[r * dim_ + c];
    }
    const Complex &operator()(size_t r, size_t c) const {
        return data_[r * dim_ + c];
    }
    std::span<const Complex> entries() const {
        return data_;
    }

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(Complex scale);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) {
        return a += b;
    }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) {
        return a -= b;
    }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex scale) {
        return a *= scale;
    }
    friend ComplexMatrix operator*(Complex scale, ComplexMatrix a) {
        return a *= scale;
    }
    friend ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);

    Complex trace() const;

    friend bool operator==(const ComplexMatrix &, const ComplexMatrix &) = default;
    friend std::ostream &operator<<(std::ostream &out, const ComplexMatrix &m);

   private:
    size_t dim_ = 0;
    std::vector<Complex> data_;
};

/// Standard matrix product. Throws std::invalid_argument on dimension mismatch.
ComplexMatrix multiply(const ComplexMatrix &a, const ComplexMatrix &b);

/// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix &m);

/// Kronecker product. Block (r, c) of the result is a(r, c) * b, so `a` acts on
/// the more significant index bits.
ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b);

/// Largest |a(r,c) - b(r,c)|. Throws std::invalid_argument on dimension mismatch.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

bool is_unitary(const ComplexMatrix &m, double tol);
bool is_hermitian(const ComplexMatrix &m, double tol);

/// Spectral decomposition of a Hermitian matrix: h = vectors * diag(values) * vectors^dagger.
/// The columns of `vectors` are orthonormal eigenvectors.
struct HermitianEigen {
    std::vector<double> values;
    ComplexMatrix vectors;
};

/// Cyclic complex Jacobi. Terminates when the off-diagonal Frobenius norm
/// drops below 1e-12 or throws ConvergenceError after 100 sweeps.
HermitianEigen eig_hermitian(const ComplexMatrix &h, double tol = 1e-9);

/// Eigendecomposition of a unitary matrix u.
///
/// `transform` has eigen-bras as rows, so transform * u * adjoint(transform) is
/// diagonal with `eigenvalues` on the diagonal. Degenerate eigenvectors are
/// orthonormal.
struct EigenDecomposition {
    std::vector<Complex> eigenvalues;
    ComplexMatrix transform;
};

/// Diagonalizes the Hermitian pair (u + u^dagger)/2 and (u - u^dagger)/2i. The
/// first is diagonalized outright; the second is then diagonalized inside each
/// eigenvalue cluster (width 1e-8) of the first, giving a common eigenbasis.
///
/// Throws std::invalid_argument if u is not unitary within tol, and
/// ConvergenceError if a Jacobi solve does not converge.
EigenDecomposition eig_unitary(const ComplexMatrix &u, double tol);

/// Returns exp(-i h) for Hermitian h, computed from the eigendecomposition of h.
/// Throws std::invalid_argument if h is not Hermitian within tol.
ComplexMatrix matrix_exp_hermitian(const ComplexMatrix &h, double tol = 1e-9);

/// True if dim is a positive power of two; writes log2(dim) to num_spins.
bool dim_to_spins(size_t dim, size_t &num_spins);

}  // namespace pulsec

#endif
