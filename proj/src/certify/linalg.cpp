#include "birkhoff/linalg.hpp"

#include <cstdint>
#include <utility>

namespace birkhoff::linalg {

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) {
        return;
    }
    for (std::size_t c = 0; c < cols_; ++c) {
        std::swap(data_[a * cols_ + c], data_[b * cols_ + c]);
    }
}

Echelon bareiss_echelon(IntMatrix m) {
    Echelon out;
    Integer prev = 1;
    Integer tmp;
    std::size_t k = 0;
    for (std::size_t col = 0; col < m.cols() && k < m.rows(); ++col) {
        std::size_t pivot_row = k;
        while (pivot_row < m.rows() && m(pivot_row, col) == 0) {
            ++pivot_row;
        }
        if (pivot_row == m.rows()) {
            continue;
        }
        m.swap_rows(pivot_row, k);
        const Integer& p = m(k, col);
        for (std::size_t i = k + 1; i < m.rows(); ++i) {
            const Integer factor = m(i, col);
            for (std::size_t j = col + 1; j < m.cols(); ++j) {
                tmp = p * m(i, j);
                tmp -= factor * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, col) = 0;
        }
        prev = m(k, col);
        out.pivots.push_back(col);
        ++k;
    }
    out.reduced = std::move(m);
    return out;
}

namespace {

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
    const unsigned __int128 prod = static_cast<unsigned __int128>(a) * b;
    std::uint64_t lo = static_cast<std::uint64_t>(prod & kPrime);
    std::uint64_t hi = static_cast<std::uint64_t>(prod >> 61);
    std::uint64_t s = lo + hi;
    return s >= kPrime ? s - kPrime : s;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    while (exp) {
        if (exp & 1) {
            r = mul_mod(r, base);
        }
        base = mul_mod(base, base);
        exp >>= 1;
    }
    return r;
}

}  // namespace

std::size_t rank_mod_prime(const IntMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    const Integer prime(std::to_string(kPrime));
    std::vector<std::uint64_t> a(rows * cols);
    Integer r;
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            mpz_fdiv_r(r.get_mpz_t(), m(i, j).get_mpz_t(), prime.get_mpz_t());
            a[i * cols + j] = mpz_get_ui(r.get_mpz_t());
        }
    }
    std::size_t k = 0;
    for (std::size_t col = 0; col < cols && k < rows; ++col) {
        std::size_t pr = k;
        while (pr < rows && a[pr * cols + col] == 0) {
            ++pr;
        }
        if (pr == rows) {
            continue;
        }
        if (pr != k) {
            for (std::size_t j = col; j < cols; ++j) {
                std::swap(a[pr * cols + j], a[k * cols + j]);
            }
        }
        const std::uint64_t inv = pow_mod(a[k * cols + col], kPrime - 2);
        for (std::size_t i = k + 1; i < rows; ++i) {
            const std::uint64_t f = mul_mod(a[i * cols + col], inv);
            if (f == 0) {
                continue;
            }
            for (std::size_t j = col; j < cols; ++j) {
                const std::uint64_t sub = mul_mod(f, a[k * cols + j]);
                std::uint64_t& x = a[i * cols + j];
                x = x >= sub ? x - sub : x + kPrime - sub;
            }
        }
        ++k;
    }
    return k;
}

void make_primitive(std::vector<Integer>& v) {
    Integer g = 0;
    for (const auto& x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    }
    if (g > 1) {
        for (auto& x : v) {
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        }
    }
}

std::vector<std::vector<Integer>> kernel_basis(const IntMatrix& m) {
    const Echelon ech = bareiss_echelon(m);
    const std::size_t cols = m.cols();
    std::vector<char> is_pivot(cols, 0);
    for (auto p : ech.pivots) {
        is_pivot[p] = 1;
    }
    std::vector<std::vector<Integer>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) {
            continue;
        }
        std::vector<Rational> x(cols, Rational(0));
        x[free] = 1;
        for (std::size_t r = ech.rank(); r-- > 0;) {
            const std::size_t pc = ech.pivots[r];
            Rational acc = 0;
            for (std::size_t j = pc + 1; j < cols; ++j) {
                if (sgn(x[j]) != 0 && ech.reduced(r, j) != 0) {
                    acc += Rational(ech.reduced(r, j)) * x[j];
                }
            }
            x[pc] = -acc / Rational(ech.reduced(r, pc));
        }
        Integer lcm = 1;
        for (const auto& q : x) {
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
        }
        std::vector<Integer> v(cols);
        for (std::size_t j = 0; j < cols; ++j) {
            v[j] = x[j].get_num() * (lcm / x[j].get_den());
        }
        make_primitive(v);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::size_t> independent_rows(const IntMatrix& m) {
    return bareiss_echelon(m.transposed()).pivots;
}

}  // namespace birkhoff::linalg
