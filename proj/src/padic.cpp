#include "coendforge/padic.hpp"

#include <algorithm>

namespace coendforge {

namespace {

using Vec = std::vector<mpq_class>;

void require_characteristic_zero(const Matrix& m, const char* where) {
    if (m.field().is_prime_field())
        throw std::invalid_argument(std::string(where) + ": p-adic norms need a characteristic-zero field");
}

void require_prime(std::uint32_t a, std::uint32_t b, const char* where) {
    if (a != b)
        throw PrimeMismatch(std::string(where) + ": primes " + std::to_string(a) + " and " + std::to_string(b) + " differ");
}

// log_p of |x|_p p^{-w}, or nullopt for x = 0.
std::optional<long> weighted_exp(const mpq_class& x, long w, std::uint32_t p) {
    if (sgn(x) == 0) return std::nullopt;
    return -padic_valuation(x, p) - w;
}

NormValue vec_norm(const Vec& v, const std::vector<long>& weights, std::uint32_t p) {
    NormValue out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (auto e = weighted_exp(v[i], weights[i], p)) out = max(out, NormValue::power(*e));
    return out;
}

Vec column_of(const Matrix& m, std::size_t c) {
    Vec v(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) v[r] = m(r, c);
    return v;
}

Matrix as_column(const Field& f, const Vec& v) {
    Matrix m(f, v.size(), 1);
    for (std::size_t r = 0; r < v.size(); ++r) m.ref(r, 0) = v[r];
    return m;
}

void axpy(Vec& y, const mpq_class& a, const Vec& x) {
    for (std::size_t i = 0; i < y.size(); ++i)
        if (sgn(x[i]) != 0) y[i] -= a * x[i];
}

bool is_zero_vec(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const mpq_class& x) { return sgn(x) == 0; });
}

// Gauss-Jordan basis of W in which each vector's pivot coordinate attains its
// norm and no other basis vector touches that coordinate. Such a basis is
// orthogonal, and reducing v to zero at the pivots leaves a vector of minimal
// norm in v + W.
struct AdaptedBasis {
    std::vector<Vec> vectors;
    std::vector<std::size_t> pivots;

    void reduce(Vec& v) const {
        for (std::size_t a = 0; a < vectors.size(); ++a)
            if (sgn(v[pivots[a]]) != 0) axpy(v, v[pivots[a]] / vectors[a][pivots[a]], vectors[a]);
    }
};

AdaptedBasis adapted_basis(const NormedSpace& s, const Matrix& w_basis) {
    AdaptedBasis b;
    for (std::size_t c = 0; c < w_basis.cols(); ++c) {
        Vec r = column_of(w_basis, c);
        b.reduce(r);
        if (is_zero_vec(r)) continue;
        std::size_t pivot = 0;
        std::optional<long> best;
        for (std::size_t i = 0; i < r.size(); ++i) {
            auto e = weighted_exp(r[i], s.weights[i], s.p);
            if (e && (!best || *e > *best)) {
                best = e;
                pivot = i;
            }
        }
        for (auto& other : b.vectors)
            if (sgn(other[pivot]) != 0) axpy(other, other[pivot] / r[pivot], r);
        b.vectors.push_back(std::move(r));
        b.pivots.push_back(pivot);
    }
    return b;
}

}  // namespace

NormValue NormValue::operator*(const NormValue& o) const {
    if (is_zero() || o.is_zero()) return zero();
    return power(*exp_ + *o.exp_);
}

NormValue NormValue::operator/(const NormValue& o) const {
    if (o.is_zero()) throw std::domain_error("division by the zero norm");
    if (is_zero()) return zero();
    return power(*exp_ - *o.exp_);
}

std::strong_ordering NormValue::operator<=>(const NormValue& o) const {
    if (is_zero() || o.is_zero()) return !is_zero() <=> !o.is_zero();
    return *exp_ <=> *o.exp_;
}

std::string NormValue::to_string() const { return is_zero() ? "0" : "p^" + std::to_string(*exp_); }

NormValue max(const NormValue& a, const NormValue& b) { return a < b ? b : a; }

NormValue padic_abs(const mpq_class& x, std::uint32_t p) {
    if (sgn(x) == 0) return NormValue::zero();
    return NormValue::power(-padic_valuation(x, p));
}

NormedSpace::NormedSpace(SpaceObject s, std::uint32_t prime)
    : space(std::move(s)), p(prime), weights(space.weights_or_zero()) {}

NormValue vector_norm(const NormedSpace& s, const Matrix& v) {
    if (v.rows() != s.dim() || v.cols() != 1) throw ShapeError("vector_norm: vector does not match the space");
    require_characteristic_zero(v, "vector_norm");
    return vec_norm(column_of(v, 0), s.weights, s.p);
}

NormValue operator_norm(const Matrix& m, const NormedSpace& from, const NormedSpace& to) {
    require_prime(from.p, to.p, "operator_norm");
    if (m.rows() != to.dim() || m.cols() != from.dim()) throw ShapeError("operator_norm: matrix does not match spaces");
    require_characteristic_zero(m, "operator_norm");
    NormValue out;
    for (std::size_t j = 0; j < m.rows(); ++j)
        for (std::size_t i = 0; i < m.cols(); ++i)
            if (auto e = weighted_exp(m(j, i), to.weights[j] - from.weights[i], from.p))
                out = max(out, NormValue::power(*e));
    return out;
}

NormedSpace banach_sum(const std::vector<NormedSpace>& parts, std::uint32_t p) {
    for (const auto& s : parts) require_prime(s.p, p, "banach_sum");
    if (parts.size() == 1) return parts.front();
    std::vector<SpaceObject> spaces;
    for (const auto& s : parts) spaces.emplace_back(s.space.labels(), s.weights);
    NormedSpace out(direct_sum(spaces), p);
    out.weights.clear();
    for (const auto& s : parts) out.weights.insert(out.weights.end(), s.weights.begin(), s.weights.end());
    return out;
}

NormedSpace banach_product(const std::vector<NormedSpace>& parts, std::uint32_t p) { return banach_sum(parts, p); }

NormedSpace normed_tensor(const NormedSpace& x, const NormedSpace& y) {
    require_prime(x.p, y.p, "normed_tensor");
    SpaceObject xs(x.space.labels(), x.weights), ys(y.space.labels(), y.weights);
    return NormedSpace(tensor(xs, ys), x.p);
}

QuotientNorm quotient_norm(const NormedSpace& s, const Matrix& w_basis, const Matrix& v, bool certify) {
    if (v.rows() != s.dim() || v.cols() != 1 || w_basis.rows() != s.dim())
        throw ShapeError("quotient_norm: vectors do not match the space");
    require_characteristic_zero(v, "quotient_norm");
    const AdaptedBasis b = adapted_basis(s, w_basis);
    const Vec original = column_of(v, 0);
    Vec reduced = original;
    b.reduce(reduced);
    QuotientNorm out;
    out.value = vec_norm(reduced, s.weights, s.p);
    Vec w = original;
    for (std::size_t i = 0; i < w.size(); ++i) w[i] -= reduced[i];
    out.witness = as_column(v.field(), w);
    if (certify) {
        if (auto brute = brute_force_quotient_norm(s, w_basis, v)) {
            if (*brute != out.value)
                throw std::logic_error("quotient_norm: reduction gives " + out.value.to_string() +
                                       " but exhaustive search gives " + brute->to_string());
            out.certified = true;
        }
    }
    return out;
}

std::optional<NormValue> brute_force_quotient_norm(const NormedSpace& s, const Matrix& w_basis, const Matrix& v,
                                                   std::size_t max_candidates) {
    const Field f = v.field();
    const std::uint32_t p = s.p;
    const Vec target = column_of(v, 0);
    const NormValue vnorm = vec_norm(target, s.weights, p);
    if (vnorm.is_zero()) return NormValue::zero();
    const std::size_t r = rank(w_basis);
    if (rank(hconcat({w_basis, v}, f, s.dim())) == r) return NormValue::zero();
    if (r == 0) return vnorm;

    // Echelon basis: rows of the reduced form of W^T carry 1 at their pivot,
    // so w = Σ c_a row_a has coordinate c_a at pivot a.
    const EchelonForm e = echelon(w_basis.transpose());
    std::vector<Vec> rows;
    for (std::size_t a = 0; a < e.rank; ++a) {
        Vec row(s.dim());
        for (std::size_t i = 0; i < s.dim(); ++i) row[i] = e.reduced(a, i);
        rows.push_back(std::move(row));
    }

    // A functional vanishing on W bounds the distance from below.
    const Matrix annihilators = kernel(w_basis.transpose());
    std::optional<long> lower;
    for (std::size_t c = 0; c < annihilators.cols() && !lower; ++c) {
        mpq_class value = 0;
        std::optional<long> dual_exp;
        for (std::size_t i = 0; i < s.dim(); ++i) {
            value += annihilators(i, c) * target[i];
            if (auto x = weighted_exp(annihilators(i, c), -s.weights[i], p)) dual_exp = dual_exp ? std::max(*dual_exp, *x) : *x;
        }
        if (sgn(value) != 0) lower = -padic_valuation(value, p) - *dual_exp;
    }
    if (!lower) throw std::logic_error("brute_force_quotient_norm: no separating functional");

    long basis_exp = 0;
    bool first = true;
    for (const auto& row : rows) {
        const long x = vec_norm(row, s.weights, p).exp();
        basis_exp = first ? x : std::max(basis_exp, x);
        first = false;
    }
    // Digits at p^e with e >= high move w by less than the lower bound.
    const long high = basis_exp - *lower + 1;
    std::vector<long> low(rows.size());
    std::size_t total = 1;
    for (std::size_t a = 0; a < rows.size(); ++a) {
        const long wp = s.weights[e.pivots[a]];
        long lo = -vnorm.exp() - wp;
        if (sgn(target[e.pivots[a]]) != 0) lo = std::min(lo, padic_valuation(target[e.pivots[a]], p));
        low[a] = lo;
        for (long k = lo; k < high; ++k) {
            if (total > max_candidates / p) return std::nullopt;
            total *= p;
        }
    }

    NormValue best = vnorm;
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t c = code;
        Vec w = target;
        for (std::size_t a = 0; a < rows.size(); ++a) {
            mpq_class coeff = 0;
            mpq_class unit = 1;
            if (low[a] < 0) {
                mpz_class den;
                mpz_ui_pow_ui(den.get_mpz_t(), p, static_cast<unsigned long>(-low[a]));
                unit = mpq_class(1, den);
            } else {
                mpz_class num;
                mpz_ui_pow_ui(num.get_mpz_t(), p, static_cast<unsigned long>(low[a]));
                unit = mpq_class(num);
            }
            for (long k = low[a]; k < high; ++k) {
                coeff += static_cast<long>(c % p) * unit;
                c /= p;
                unit *= p;
            }
            coeff.canonicalize();
            if (sgn(coeff) != 0) axpy(w, coeff, rows[a]);
        }
        best = std::min(best, vec_norm(w, s.weights, p));
    }
    return best;
}

NormValue NormedQuotient::norm(const Matrix& q) const { return vector_norm(orthogonal, to_orthogonal * q); }

NormedQuotient normed_quotient(const NormedSpace& ambient, const Matrix& relations) {
    require_characteristic_zero(relations, "normed_quotient");
    const Field f = relations.field();
    NormedQuotient out;
    out.ambient = ambient;
    out.relations = relations;
    out.cokernel = cokernel(relations);
    const AdaptedBasis b = adapted_basis(ambient, relations);
    std::vector<bool> is_pivot(ambient.dim(), false);
    for (auto piv : b.pivots) is_pivot[piv] = true;
    std::vector<std::size_t> free;
    std::vector<std::string> labels;
    std::vector<long> weights;
    for (std::size_t i = 0; i < ambient.dim(); ++i)
        if (!is_pivot[i]) {
            free.push_back(i);
            labels.push_back(ambient.space.labels()[i]);
            weights.push_back(ambient.weights[i]);
        }
    out.orthogonal = NormedSpace(SpaceObject(std::move(labels), std::move(weights)), ambient.p);
    out.to_orthogonal = Matrix(f, free.size(), out.dim());
    for (std::size_t c = 0; c < out.dim(); ++c) {
        Vec rep = column_of(out.cokernel.section, c);
        b.reduce(rep);
        for (std::size_t k = 0; k < free.size(); ++k) out.to_orthogonal.ref(k, c) = rep[free[k]];
    }
    out.from_orthogonal = inverse(out.to_orthogonal);
    return out;
}

NormValue operator_norm_into(const Matrix& m, const NormedSpace& from, const NormedQuotient& to) {
    return operator_norm(to.to_orthogonal * m, from, to.orthogonal);
}

NormValue operator_norm_out_of(const Matrix& m, const NormedQuotient& from, const NormedSpace& to) {
    return operator_norm(m * from.from_orthogonal, from.orthogonal, to);
}

BanachColimit banach_colimit(const Representation& rep, std::uint32_t p) {
    const Field f = rep.field;
    BanachColimit out;
    std::vector<NormedSpace> parts;
    std::size_t total = 0;
    for (const auto& s : rep.spaces) {
        out.block_offset.push_back(total);
        total += s.dim();
        parts.emplace_back(s, p);
    }
    const NormedSpace sum = banach_sum(parts, p);
    std::vector<Matrix> cols;
    for (const auto& a : rep.arrows) {
        Matrix r(f, total, rep.spaces[a.dom].dim());
        r.add_block(out.block_offset[a.cod], 0, a.value);
        r.add_block(out.block_offset[a.dom], 0, Matrix::identity(f, rep.spaces[a.dom].dim()).scaled(-1));
        cols.push_back(std::move(r));
    }
    out.quotient = normed_quotient(sum, hconcat(cols, f, total));
    for (std::size_t x = 0; x < rep.spaces.size(); ++x) {
        Matrix c = out.quotient.cokernel.projection.block(0, out.block_offset[x], out.quotient.dim(), rep.spaces[x].dim());
        out.cocone_norms.push_back(operator_norm_into(c, parts[x], out.quotient));
        out.cocone.push_back(std::move(c));
    }
    for (std::size_t k = 0; k < out.quotient.dim(); ++k) {
        Matrix e(f, out.quotient.dim(), 1);
        e.ref(k, 0) = 1;
        out.basis_norms.push_back(out.quotient.norm(e));
    }
    return out;
}

BanachColimit banach_colimit(const DiagramFunctor& f, std::uint32_t p) { return banach_colimit(f.representation(), p); }

BoundedTransformation check_bounded(const Transformation& t, const std::vector<NormedSpace>& sources,
                                    const std::vector<NormedSpace>& targets) {
    if (sources.size() != t.components.size() || targets.size() != t.components.size())
        throw ShapeError("check_bounded: one source and one target space per component");
    BoundedTransformation out{t, {}, NormValue::zero()};
    for (std::size_t x = 0; x < t.components.size(); ++x) {
        out.component_norms.push_back(operator_norm(t.components[x], sources[x], targets[x]));
        out.bound = max(out.bound, out.component_norms.back());
    }
    return out;
}

BoundedCoend bounded_coend(const Representation& rep, std::uint32_t p) {
    BoundedCoend out;
    out.coend = coend_of_representation(rep);
    const Field f = rep.field;
    std::vector<NormedSpace> blocks, values;
    for (const auto& s : rep.spaces) {
        values.emplace_back(s, p);
        blocks.emplace_back(tensor(dual(s), s), p);
    }
    const NormedSpace n = banach_sum(blocks, p);
    out.quotient = normed_quotient(n, out.coend.relations);
    const NormedQuotient& q = out.quotient;
    for (std::size_t k = 0; k < q.dim(); ++k) {
        Matrix e(f, q.dim(), 1);
        e.ref(k, 0) = 1;
        out.basis_norms.push_back(q.norm(e));
    }
    out.projection_norm = operator_norm_into(out.coend.projection, n, q);
    for (std::size_t x = 0; x < rep.spaces.size(); ++x)
        out.injection_norms.push_back(operator_norm_into(out.coend.injections[x], blocks[x], q));

    // Q ⊗ Q in orthogonal coordinates.
    const NormedSpace qq = normed_tensor(q.orthogonal, q.orthogonal);
    out.comultiplication_norm = operator_norm(
        kron(q.to_orthogonal, q.to_orthogonal) * out.coend.coalgebra.comultiplication * q.from_orthogonal,
        q.orthogonal, qq);
    out.counit_norm = operator_norm_out_of(out.coend.coalgebra.counit, q, NormedSpace(SpaceObject::unit(), p));

    Transformation delta = delta_transformation(out.coend);
    std::vector<NormedSpace> targets;
    for (std::size_t x = 0; x < rep.spaces.size(); ++x) {
        targets.push_back(normed_tensor(values[x], q.orthogonal));
        delta.components[x] = kron(Matrix::identity(f, rep.spaces[x].dim()), q.to_orthogonal) * delta.components[x];
    }
    out.delta = check_bounded(delta, values, targets);
    out.delta.transformation = delta_transformation(out.coend);
    return out;
}

BoundedCoend bounded_coend(const DiagramFunctor& f, std::optional<std::uint32_t> p) {
    if (!p) {
        if (!f.field().is_padic()) throw std::invalid_argument("bounded_coend: a prime is needed outside padic fields");
        p = f.field().characteristic_prime();
    }
    return bounded_coend(f.representation(), *p);
}

}  // namespace coendforge
