#include "qsym/operators.hpp"

#include <stdexcept>
#include <vector>

#include "qsym/qfactors.hpp"
#include "qsym/symfunc.hpp"

namespace qsym {

namespace {

RatFunc letter(int i) { return RatFunc::variable(letters(i)[i - 1]); }

RatFunc qv(int32_t k = 1) { return RatFunc::variable(std_syms().q, k); }
RatFunc tv(int32_t k = 1) { return RatFunc::variable(std_syms().t, k); }

/// prod_{j != i} (targ x_i - x_j) / (x_i - x_j) over j = 1..n.
RatFunc select_ratio_single(int i, int n, const RatFunc& targ) {
    RatFunc r(1);
    for (int j = 1; j <= n; ++j) {
        if (j == i) continue;
        r = r * (targ * letter(i) - letter(j)) / (letter(i) - letter(j));
    }
    return r;
}

/// Shift every letter of I by q^{+-1}.
RatFunc shift_subset(const RatFunc& f, unsigned mask, int n, bool inverse) {
    RatFunc g = f;
    for (int i = 1; i <= n; ++i)
        if (mask & (1u << (i - 1))) g = qshift(g, i, inverse);
    return g;
}

/// The subset-sum operator: weights (-1)^|I| t^{binom(|I|,2)}, ratio
/// prefactors across the I boundary, the two b-dependent products, and a
/// forward q-shift of all letters in I.  The b = 0 case reduces to the
/// (-c)^|I| eigenoperator.
RatFunc apply_subset_sum(const RatFunc& f, int n, const RatFunc& b,
                         const RatFunc& c) {
    RatFunc total(0);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        int size = 0;
        for (int i = 1; i <= n; ++i)
            if (mask & (1u << (i - 1))) ++size;
        RatFunc term = qt_pow(0, static_cast<long>(size) * (size - 1) / 2);
        if (size % 2) term = -term;
        for (int i = 1; i <= n; ++i) {
            if (!(mask & (1u << (i - 1)))) continue;
            for (int j = 1; j <= n; ++j) {
                if (mask & (1u << (j - 1))) continue;
                term = term * (tv() * letter(i) - letter(j)) /
                       (letter(i) - letter(j));
            }
        }
        if (!b.is_zero()) {
            for (int j = 1; j <= n; ++j)
                if (!(mask & (1u << (j - 1))))
                    term = term * (RatFunc(1) - b * letter(j));
            for (int i = 1; i <= n; ++i)
                if (mask & (1u << (i - 1)))
                    term = term * (c - b * qt_pow(0, 1 - n) * letter(i));
        } else {
            term = term * c.pow(size);
        }
        total = total + term * shift_subset(f, mask, n, false);
    }
    return total;
}

}  // namespace

RatFunc qshift(const RatFunc& f, int i, bool inverse) {
    if (i < 1) throw std::invalid_argument("qshift: letter index must be positive");
    Symbol x = letters(i)[i - 1];
    return f.substitute(x, qv(inverse ? -1 : 1) * RatFunc::variable(x));
}

DiffOperator op_eigen_c(int n, const RatFunc& c) {
    return DiffOperator{DiffOperator::Kind::EigenC, n, RatFunc(0), c};
}

DiffOperator op_first_order(int n) {
    return DiffOperator{DiffOperator::Kind::FirstOrder, n, RatFunc(0), RatFunc(0)};
}

DiffOperator op_two_param(int n, const RatFunc& b, const RatFunc& c) {
    return DiffOperator{DiffOperator::Kind::TwoParam, n, b, c};
}

DiffOperator op_inverse_first_order(int n, const RatFunc& b) {
    return DiffOperator{DiffOperator::Kind::InverseFirstOrder, n, b, RatFunc(0)};
}

DiffOperator op_box_adding(int n) {
    return DiffOperator{DiffOperator::Kind::BoxAdding, n, RatFunc(0), RatFunc(0)};
}

RatFunc apply_op(const DiffOperator& op, const RatFunc& f) {
    const int n = op.n;
    if (n < 1 || n > 4)
        throw std::invalid_argument("apply_op: alphabet size out of range");
    RatFunc result(0);
    switch (op.kind) {
        case DiffOperator::Kind::EigenC:
            result = apply_subset_sum(f, n, RatFunc(0), op.c);
            break;
        case DiffOperator::Kind::TwoParam:
            result = apply_subset_sum(f, n, op.b, op.c);
            break;
        case DiffOperator::Kind::FirstOrder:
            for (int i = 1; i <= n; ++i)
                result = result +
                         select_ratio_single(i, n, tv()) * qshift(f, i, false);
            break;
        case DiffOperator::Kind::InverseFirstOrder:
            for (int i = 1; i <= n; ++i) {
                RatFunc corr = op.b * letter(i) * qv(-1);
                result = result + select_ratio_single(i, n, tv(-1)) *
                                      ((RatFunc(1) - corr) * qshift(f, i, true) +
                                       corr * f);
            }
            break;
        case DiffOperator::Kind::BoxAdding:
            for (int i = 1; i <= n; ++i)
                result = result + letter(i) * select_ratio_single(i, n, tv(-1)) *
                                      (qshift(f, i, true) - f);
            break;
    }
    // a symmetric input leaves no letter-difference factor behind
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            ExactPoly diff = ExactPoly::variable(letters(j)[i - 1]) -
                             ExactPoly::variable(letters(j)[j - 1]);
            ExactPoly quot;
            if (result.den().try_exact_divide(diff, quot))
                throw std::logic_error(
                    "apply_op: input not symmetric in the alphabet");
        }
    return result;
}

RatFunc eigenvalue_product(const Partition& lam, int n, const RatFunc& c) {
    RatFunc r(1);
    for (int i = 1; i <= n; ++i) {
        long li = lam.part(i);
        r = r * (RatFunc(1) - c * qt_pow(li, n - i));
    }
    return r;
}

RatFunc eigenvalue_sum(const Partition& lam, int n) {
    RatFunc r(0);
    for (int i = 1; i <= n; ++i) {
        long li = lam.part(i);
        r = r + qt_pow(li, n - i);
    }
    return r;
}

RatFunc eigenvalue_sum_inverted(const Partition& lam, int n) {
    RatFunc r(0);
    for (int i = 1; i <= n; ++i) {
        long li = lam.part(i);
        r = r + qt_pow(-li, i - n);
    }
    return r;
}

}  // namespace qsym
