#include "gcr/intmatrix.hpp"

#include <algorithm>

namespace gcr {

IntMat IntMat::identity(size_t n) {
    IntMat m(n, n);
    for (size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

IntMat IntMat::transpose() const {
    IntMat m(cols_, rows_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c)
            m.at(c, r) = at(r, c);
    return m;
}

IntMat IntMat::mul(const IntMat& o) const {
    IntMat m(rows_, o.cols_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t k = 0; k < cols_; ++k) {
            const mpz_class& x = at(r, k);
            if (x == 0)
                continue;
            for (size_t c = 0; c < o.cols_; ++c)
                m.at(r, c) += x * o.at(k, c);
        }
    return m;
}

IntMat IntMat::hstack(const IntMat& o) const {
    IntMat m(rows_, cols_ + o.cols_);
    for (size_t r = 0; r < rows_; ++r) {
        for (size_t c = 0; c < cols_; ++c)
            m.at(r, c) = at(r, c);
        for (size_t c = 0; c < o.cols_; ++c)
            m.at(r, cols_ + c) = o.at(r, c);
    }
    return m;
}

void IntMat::swap_rows(size_t i, size_t j) {
    if (i == j)
        return;
    for (size_t c = 0; c < cols_; ++c)
        std::swap(at(i, c), at(j, c));
}

void IntMat::swap_cols(size_t i, size_t j) {
    if (i == j)
        return;
    for (size_t r = 0; r < rows_; ++r)
        std::swap(at(r, i), at(r, j));
}

void IntMat::negate_row(size_t i) {
    for (size_t c = 0; c < cols_; ++c)
        at(i, c) = -at(i, c);
}

void IntMat::negate_col(size_t i) {
    for (size_t r = 0; r < rows_; ++r)
        at(r, i) = -at(r, i);
}

void IntMat::add_row_multiple(size_t dst, size_t src, const mpz_class& q) {
    if (q == 0)
        return;
    for (size_t c = 0; c < cols_; ++c)
        at(dst, c) += q * at(src, c);
}

void IntMat::add_col_multiple(size_t dst, size_t src, const mpz_class& q) {
    if (q == 0)
        return;
    for (size_t r = 0; r < rows_; ++r)
        at(r, dst) += q * at(r, src);
}

std::string IntMat::to_string() const {
    std::string s;
    for (size_t r = 0; r < rows_; ++r) {
        s += "[";
        for (size_t c = 0; c < cols_; ++c) {
            if (c)
                s += " ";
            s += at(r, c).get_str();
        }
        s += "]\n";
    }
    return s;
}

SmithResult smith_normal_form(const IntMat& M, bool with_transforms) {
    IntMat A = M;
    const size_t R = A.rows(), C = A.cols();
    IntMat U, V;
    if (with_transforms) {
        U = IntMat::identity(R);
        V = IntMat::identity(C);
    }
    auto row_op = [&](size_t dst, size_t src, const mpz_class& q) {
        A.add_row_multiple(dst, src, q);
        if (with_transforms)
            U.add_row_multiple(dst, src, q);
    };
    auto col_op = [&](size_t dst, size_t src, const mpz_class& q) {
        A.add_col_multiple(dst, src, q);
        if (with_transforms)
            V.add_col_multiple(dst, src, q);
    };

    size_t k = 0;
    const size_t kmax = std::min(R, C);
    for (; k < kmax; ++k) {
        // pivot: smallest nonzero absolute value in the remaining block
        size_t pi = k, pj = k;
        bool found = false;
        mpz_class best;
        for (size_t i = k; i < R; ++i)
            for (size_t j = k; j < C; ++j) {
                if (A.at(i, j) == 0)
                    continue;
                mpz_class v = abs(A.at(i, j));
                if (!found || v < best) {
                    best = v;
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found)
            break;
        A.swap_rows(k, pi);
        if (with_transforms)
            U.swap_rows(k, pi);
        A.swap_cols(k, pj);
        if (with_transforms)
            V.swap_cols(k, pj);
        if (A.at(k, k) < 0) {
            A.negate_row(k);
            if (with_transforms)
                U.negate_row(k);
        }

        for (;;) {
            bool clean = true;
            for (size_t i = k + 1; i < R; ++i) {
                if (A.at(i, k) == 0)
                    continue;
                mpz_class q = A.at(i, k) / A.at(k, k);  // truncated division
                row_op(i, k, -q);
                if (A.at(i, k) != 0) {
                    // remainder became the new, smaller pivot
                    A.swap_rows(k, i);
                    if (with_transforms)
                        U.swap_rows(k, i);
                    if (A.at(k, k) < 0) {
                        A.negate_row(k);
                        if (with_transforms)
                            U.negate_row(k);
                    }
                    clean = false;
                }
            }
            for (size_t j = k + 1; j < C; ++j) {
                if (A.at(k, j) == 0)
                    continue;
                mpz_class q = A.at(k, j) / A.at(k, k);
                col_op(j, k, -q);
                if (A.at(k, j) != 0) {
                    A.swap_cols(k, j);
                    if (with_transforms)
                        V.swap_cols(k, j);
                    if (A.at(k, k) < 0) {
                        A.negate_col(k);
                        if (with_transforms)
                            V.negate_col(k);
                    }
                    clean = false;
                }
            }
            if (!clean)
                continue;
            // enforce divisibility of the rest of the block by the pivot
            bool fixed = false;
            for (size_t i = k + 1; i < R && !fixed; ++i)
                for (size_t j = k + 1; j < C && !fixed; ++j)
                    if (A.at(i, j) % A.at(k, k) != 0) {
                        row_op(k, i, 1);
                        fixed = true;
                    }
            if (!fixed)
                break;
        }
    }

    SmithResult res;
    for (size_t i = 0; i < k; ++i)
        res.factors.push_back(A.at(i, i));
    if (with_transforms) {
        res.U = std::move(U);
        res.V = std::move(V);
    }
    return res;
}

IntMat kernel_basis(const IntMat& M) {
    SmithResult s = smith_normal_form(M, true);
    const size_t r = s.rank();
    const IntMat& V = *s.V;
    IntMat K(M.cols(), M.cols() - r);
    for (size_t c = r; c < M.cols(); ++c)
        for (size_t i = 0; i < M.cols(); ++i)
            K.at(i, c - r) = V.at(i, c);
    return K;
}

IntMat column_lattice_basis(const IntMat& P) {
    IntMat H = P;
    const size_t R = H.rows(), C = H.cols();
    size_t pc = 0;  // next pivot column
    for (size_t r = 0; r < R && pc < C; ++r) {
        // make H(r, pc) the gcd of row r over columns >= pc, zero the rest
        size_t nz = pc;
        while (nz < C && H.at(r, nz) == 0)
            ++nz;
        if (nz == C)
            continue;
        H.swap_cols(pc, nz);
        for (size_t j = pc + 1; j < C; ++j) {
            if (H.at(r, j) == 0)
                continue;
            mpz_class g, u, v;
            mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(),
                       H.at(r, pc).get_mpz_t(), H.at(r, j).get_mpz_t());
            mpz_class a = H.at(r, pc) / g, b = H.at(r, j) / g;
            // unimodular transform on the column pair (pc, j)
            for (size_t i = 0; i < R; ++i) {
                mpz_class x = H.at(i, pc), y = H.at(i, j);
                H.at(i, pc) = u * x + v * y;
                H.at(i, j) = -b * x + a * y;
            }
        }
        if (H.at(r, pc) < 0)
            H.negate_col(pc);
        ++pc;
    }
    IntMat B(R, pc);
    for (size_t c = 0; c < pc; ++c)
        for (size_t i = 0; i < R; ++i)
            B.at(i, c) = H.at(i, c);
    return B;
}

std::optional<IntMat> solve_exact(const IntMat& B, const IntMat& R) {
    if (B.rows() != R.rows())
        return std::nullopt;
    SmithResult s = smith_normal_form(B, true);
    const size_t rank = s.rank();
    IntMat Y = s.U->mul(R);  // D * (V^-1 X) = U R
    IntMat X(B.cols(), R.cols());
    for (size_t c = 0; c < R.cols(); ++c) {
        for (size_t i = 0; i < B.rows(); ++i) {
            if (i < rank) {
                if (Y.at(i, c) % s.factors[i] != 0)
                    return std::nullopt;
            } else if (Y.at(i, c) != 0) {
                return std::nullopt;
            }
        }
        for (size_t i = 0; i < rank; ++i)
            X.at(i, c) = Y.at(i, c) / s.factors[i];
        // rows of X beyond rank stay zero (any solution will do)
    }
    return s.V->mul(X);
}

size_t rank_mod_p(const IntMat& M, long p) {
    const size_t R = M.rows(), C = M.cols();
    std::vector<std::vector<long>> a(R, std::vector<long>(C));
    for (size_t r = 0; r < R; ++r)
        for (size_t c = 0; c < C; ++c) {
            mpz_class v = M.at(r, c) % p;
            long x = v.get_si();
            a[r][c] = ((x % p) + p) % p;
        }
    size_t rank = 0;
    for (size_t c = 0; c < C && rank < R; ++c) {
        size_t piv = rank;
        while (piv < R && a[piv][c] == 0)
            ++piv;
        if (piv == R)
            continue;
        std::swap(a[rank], a[piv]);
        // scale pivot row to 1
        long inv = 1, base = a[rank][c] % p;
        for (long e = p - 2; e; e >>= 1) {  // Fermat inverse
            if (e & 1)
                inv = inv * base % p;
            base = base * base % p;
        }
        for (size_t j = c; j < C; ++j)
            a[rank][j] = a[rank][j] * inv % p;
        for (size_t i = 0; i < R; ++i) {
            if (i == rank || a[i][c] == 0)
                continue;
            long f = a[i][c];
            for (size_t j = c; j < C; ++j)
                a[i][j] = ((a[i][j] - f * a[rank][j]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

size_t rank_rational(const IntMat& M) {
    return smith_normal_form(M, false).rank();
}

std::string AbGroup::to_string() const {
    if (is_zero())
        return "0";
    std::string s;
    if (free_rank > 0) {
        s = "Z";
        if (free_rank > 1)
            s += "^" + std::to_string(free_rank);
    }
    // group equal invariant factors for readability
    for (size_t i = 0; i < torsion.size();) {
        size_t j = i;
        while (j < torsion.size() && torsion[j] == torsion[i])
            ++j;
        if (!s.empty())
            s += " + ";
        std::string cyc = "Z/" + torsion[i].get_str();
        if (j - i > 1)
            s += "(" + cyc + ")^" + std::to_string(j - i);
        else
            s += cyc;
        i = j;
    }
    return s;
}

AbGroup cokernel(size_t ambient_rank, const IntMat& relation_cols) {
    SmithResult s = smith_normal_form(relation_cols, false);
    AbGroup g;
    g.free_rank = static_cast<long>(ambient_rank) - static_cast<long>(s.rank());
    for (const auto& d : s.factors)
        if (d > 1)
            g.torsion.push_back(d);
    return g;
}

}  // namespace gcr
