#include "corank/linalg.hpp"

#include <algorithm>

namespace corank {

namespace {

// g = x*a + y*b, g >= 0
void ext_gcd(const Int& a, const Int& b, Int& g, Int& x, Int& y) {
    Int old_r = a, r = b, old_x = 1, xx = 0, old_y = 0, yy = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int t = old_r - q * r; old_r = r; r = t;
        t = old_x - q * xx; old_x = xx; xx = t;
        t = old_y - q * yy; old_y = yy; yy = t;
    }
    if (old_r < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
    g = old_r; x = old_x; y = old_y;
}

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

} // namespace

HnfResult hnf(const Matrix& m) {
    const Ring ring = m.ring();
    Matrix h = m;
    Matrix u = Matrix::identity(ring, m.rows());
    const bool field = ring.is_field();
    std::size_t r = 0;
    for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
        std::size_t piv = r;
        while (piv < h.rows() && h.at(piv, c).is_zero()) ++piv;
        if (piv == h.rows()) continue;
        h.swap_rows(r, piv);
        u.swap_rows(r, piv);

        if (field) {
            Scalar inv = h.at(r, c).inverse();
            h.scale_row(r, inv);
            u.scale_row(r, inv);
            for (std::size_t i = 0; i < h.rows(); ++i) {
                if (i == r || h.at(i, c).is_zero()) continue;
                Scalar f = -h.at(i, c);
                h.add_multiple(i, r, f);
                u.add_multiple(i, r, f);
            }
        } else {
            for (std::size_t i = r + 1; i < h.rows(); ++i) {
                if (h.at(i, c).is_zero()) continue;
                const Int& a = h.at(r, c).num();
                const Int& b = h.at(i, c).num();
                if (b % a == 0) {
                    Scalar f(ring, -(b / a));
                    h.add_multiple(i, r, f);
                    u.add_multiple(i, r, f);
                } else {
                    Int g, x, y;
                    ext_gcd(a, b, g, x, y);
                    Scalar sx(ring, x), sy(ring, y);
                    Scalar s2(ring, -(b / g)), s3(ring, a / g);
                    h.combine_rows(r, i, sx, sy, s2, s3);
                    u.combine_rows(r, i, sx, sy, s2, s3);
                }
            }
            if (h.at(r, c).num() < 0) {
                Scalar neg(ring, -1);
                h.scale_row(r, neg);
                u.scale_row(r, neg);
            }
            const Int& d = h.at(r, c).num();
            for (std::size_t i = 0; i < r; ++i) {
                const Int& e = h.at(i, c).num();
                if (e == 0) continue;
                Int q = floor_div(e, d);
                if (q == 0) continue;
                Scalar f(ring, -q);
                h.add_multiple(i, r, f);
                u.add_multiple(i, r, f);
            }
        }
        ++r;
    }
    return {std::move(h), std::move(u)};
}

SnfResult snf(const Matrix& m) {
    const Ring ring = m.ring();
    Matrix s = m;
    Matrix u = Matrix::identity(ring, m.rows());
    Matrix v = Matrix::identity(ring, m.cols());
    const bool field = ring.is_field();
    const std::size_t n = std::min(s.rows(), s.cols());

    auto eliminate_at = [&](std::size_t t) {
        // assumes s(t,t) != 0; clears row t and column t outside the pivot
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (std::size_t i = 0; i < s.rows(); ++i) {
                if (i == t || s.at(i, t).is_zero()) continue;
                if (field || s.at(t, t).divides(s.at(i, t))) {
                    Scalar f = -s.at(i, t).div_exact(s.at(t, t));
                    s.add_multiple(i, t, f);
                    u.add_multiple(i, t, f);
                } else {
                    Int g, x, y;
                    ext_gcd(s.at(t, t).num(), s.at(i, t).num(), g, x, y);
                    Scalar sx(ring, x), sy(ring, y);
                    Scalar s2(ring, -(s.at(i, t).num() / g)), s3(ring, s.at(t, t).num() / g);
                    s.combine_rows(t, i, sx, sy, s2, s3);
                    u.combine_rows(t, i, sx, sy, s2, s3);
                    dirty = true;
                }
            }
            for (std::size_t j = 0; j < s.cols(); ++j) {
                if (j == t || s.at(t, j).is_zero()) continue;
                if (field || s.at(t, t).divides(s.at(t, j))) {
                    Scalar f = -s.at(t, j).div_exact(s.at(t, t));
                    s.add_col_multiple(j, t, f);
                    v.add_col_multiple(j, t, f);
                } else {
                    Int g, x, y;
                    ext_gcd(s.at(t, t).num(), s.at(t, j).num(), g, x, y);
                    Scalar sx(ring, x), sy(ring, y);
                    Scalar s2(ring, -(s.at(t, j).num() / g)), s3(ring, s.at(t, t).num() / g);
                    s.combine_cols(t, j, sx, sy, s2, s3);
                    v.combine_cols(t, j, sx, sy, s2, s3);
                    dirty = true;
                }
            }
            // column ops may have refilled column t
            for (std::size_t i = 0; i < s.rows() && !dirty; ++i)
                if (i != t && !s.at(i, t).is_zero()) dirty = true;
        }
    };

    std::size_t t = 0;
    while (t < n) {
        std::size_t pi = t, pj = t;
        bool found = false;
        for (std::size_t i = t; i < s.rows() && !found; ++i)
            for (std::size_t j = t; j < s.cols() && !found; ++j)
                if (!s.at(i, j).is_zero()) { pi = i; pj = j; found = true; }
        if (!found) break;
        s.swap_rows(t, pi);
        u.swap_rows(t, pi);
        s.swap_cols(t, pj);
        v.swap_cols(t, pj);
        eliminate_at(t);
        if (!field && s.at(t, t).num() < 0) {
            Scalar neg(ring, -1);
            s.scale_row(t, neg);
            u.scale_row(t, neg);
        }
        if (field && !s.at(t, t).is_one()) {
            Scalar inv = s.at(t, t).inverse();
            s.scale_row(t, inv);
            u.scale_row(t, inv);
        }
        ++t;
    }

    if (!field) {
        // enforce the divisibility chain
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i + 1 < t; ++i) {
                for (std::size_t j = i + 1; j < t; ++j) {
                    if (!s.at(i, i).divides(s.at(j, j))) {
                        Scalar one_ = Scalar::one(ring);
                        s.add_col_multiple(i, j, one_);
                        v.add_col_multiple(i, j, one_);
                        eliminate_at(i);
                        if (s.at(i, i).num() < 0) {
                            Scalar neg(ring, -1);
                            s.scale_row(i, neg);
                            u.scale_row(i, neg);
                        }
                        // re-diagonalize everything the fixup may have disturbed
                        for (std::size_t k = i + 1; k < t; ++k) {
                            if (s.at(k, k).is_zero()) {
                                std::size_t qi = k, qj = k;
                                bool f2 = false;
                                for (std::size_t a = k; a < s.rows() && !f2; ++a)
                                    for (std::size_t b = k; b < s.cols() && !f2; ++b)
                                        if (!s.at(a, b).is_zero()) { qi = a; qj = b; f2 = true; }
                                if (!f2) break;
                                s.swap_rows(k, qi);
                                u.swap_rows(k, qi);
                                s.swap_cols(k, qj);
                                v.swap_cols(k, qj);
                            }
                            eliminate_at(k);
                            if (s.at(k, k).num() < 0) {
                                Scalar neg(ring, -1);
                                s.scale_row(k, neg);
                                u.scale_row(k, neg);
                            }
                        }
                        changed = true;
                    }
                }
            }
        }
    }

    return {std::move(s), std::move(u), std::move(v)};
}

std::vector<Scalar> diagonal(const Matrix& m) {
    std::vector<Scalar> d;
    for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) d.push_back(m.at(i, i));
    return d;
}

Matrix inverse_unimodular(const Matrix& m) {
    if (m.rows() != m.cols()) throw domain_error("inverse of non-square matrix");
    Matrix inv(m.ring(), m.rows(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto x = solve_left(m, unit_vector(m.ring(), m.rows(), i));
        if (!x) throw domain_error("matrix not invertible over the ring");
        inv.set_row(i, *x);
    }
    return inv;
}

std::optional<Vector> solve_left(const Matrix& m, const Vector& b) {
    if (b.size() != m.cols()) throw domain_error("solve shape mismatch");
    auto [h, u] = hnf(m);
    Vector residual = b;
    Vector y = zero_vector(m.ring(), m.rows());
    for (std::size_t i = 0; i < h.rows(); ++i) {
        std::size_t j = 0;
        while (j < h.cols() && h.at(i, j).is_zero()) ++j;
        if (j == h.cols()) break; // zero rows last
        const Scalar& d = h.at(i, j);
        const Scalar& c = residual[j];
        if (c.is_zero()) continue;
        if (!d.divides(c)) return std::nullopt;
        Scalar q = c.div_exact(d);
        y[i] = q;
        for (std::size_t k = j; k < h.cols(); ++k) residual[k] -= q * h.at(i, k);
    }
    if (!is_zero(residual)) return std::nullopt;
    return mul(y, u);
}

Submodule Submodule::zero(Ring ring, std::size_t ambient) {
    Submodule s;
    s.ring_ = ring;
    s.ambient_ = ambient;
    s.basis_ = Matrix(ring, 0, ambient);
    return s;
}

Submodule Submodule::full(Ring ring, std::size_t ambient) {
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < ambient; ++i) gens.push_back(unit_vector(ring, ambient, i));
    return span(ring, ambient, std::move(gens));
}

Submodule Submodule::span(Ring ring, std::size_t ambient, std::vector<Vector> generators) {
    for (const auto& g : generators)
        if (g.size() != ambient) throw domain_error("generator has wrong ambient rank");
    Submodule s;
    s.ring_ = ring;
    s.ambient_ = ambient;
    s.gens_ = std::move(generators);
    Matrix m = Matrix::from_rows(ring, ambient, s.gens_);
    Matrix h = hnf(m).h;
    s.basis_ = Matrix(ring, 0, ambient);
    for (std::size_t i = 0; i < h.rows(); ++i)
        if (!h.row_is_zero(i)) s.basis_.append_row(h.row(i));
    return s;
}

Submodule::Reduction Submodule::reduce(const Vector& v) const {
    if (v.size() != ambient_) throw domain_error("reduce: wrong ambient rank");
    Vector residue = v;
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        std::size_t j = 0;
        while (j < ambient_ && basis_.at(i, j).is_zero()) ++j;
        if (j == ambient_) continue;
        const Scalar& d = basis_.at(i, j);
        const Scalar& c = residue[j];
        if (c.is_zero()) continue;
        Scalar q = ring_.is_field() ? c.div_exact(d)
                                    : Scalar(ring_, floor_div(c.num(), d.num()));
        if (q.is_zero()) continue;
        for (std::size_t k = j; k < ambient_; ++k) residue[k] -= q * basis_.at(i, k);
    }
    bool in = is_zero(residue);
    return {std::move(residue), in};
}

bool Submodule::contains(const Vector& v) const { return reduce(v).in_submodule; }

bool Submodule::contains(const Submodule& o) const {
    for (std::size_t i = 0; i < o.basis_.rows(); ++i)
        if (!contains(o.basis_.row(i))) return false;
    return true;
}

Submodule Submodule::sum(const Submodule& o) const {
    if (ambient_ != o.ambient_ || ring_ != o.ring_) throw domain_error("sum: mismatched modules");
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < basis_.rows(); ++i) gens.push_back(basis_.row(i));
    for (std::size_t i = 0; i < o.basis_.rows(); ++i) gens.push_back(o.basis_.row(i));
    return span(ring_, ambient_, std::move(gens));
}

bool Submodule::operator==(const Submodule& o) const {
    return ring_ == o.ring_ && ambient_ == o.ambient_ && basis_ == o.basis_;
}

Submodule intersect(const Submodule& a, const Submodule& b) {
    if (a.ambient_ != b.ambient_ || a.ring_ != b.ring_)
        throw domain_error("intersect: mismatched modules");
    if (a.rank() == 0 || b.rank() == 0) return Submodule::zero(a.ring_, a.ambient_);
    Matrix stacked(a.ring_, 0, a.ambient_);
    for (std::size_t i = 0; i < a.basis_.rows(); ++i) stacked.append_row(a.basis_.row(i));
    for (std::size_t i = 0; i < b.basis_.rows(); ++i) stacked.append_row(b.basis_.row(i));
    Submodule ker = left_kernel(stacked);
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < ker.basis().rows(); ++i) {
        Vector coeffs = ker.basis().row(i);
        Vector w = zero_vector(a.ring_, a.ambient_);
        for (std::size_t r = 0; r < a.basis_.rows(); ++r)
            w = add(w, scale(coeffs[r], a.basis_.row(r)));
        gens.push_back(std::move(w));
    }
    return Submodule::span(a.ring_, a.ambient_, std::move(gens));
}

Submodule left_kernel(const Matrix& m) {
    auto [h, u] = hnf(m);
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < h.rows(); ++i)
        if (h.row_is_zero(i)) gens.push_back(u.row(i));
    return Submodule::span(m.ring(), m.rows(), std::move(gens));
}

Submodule relations_among(Ring ring, std::size_t ambient, const std::vector<Vector>& generators) {
    return left_kernel(Matrix::from_rows(ring, ambient, generators));
}

Submodule preimage_of_span(const Matrix& m, const Submodule& w) {
    if (w.ambient() != m.cols()) throw domain_error("preimage: shape mismatch");
    if (w.rank() == 0) return left_kernel(m);
    Matrix stacked = m;
    for (std::size_t i = 0; i < w.basis().rows(); ++i) stacked.append_row(w.basis().row(i));
    Submodule ker = left_kernel(stacked);
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < ker.basis().rows(); ++i) {
        Vector full = ker.basis().row(i);
        gens.emplace_back(full.begin(), full.begin() + m.rows());
    }
    return Submodule::span(m.ring(), m.rows(), std::move(gens));
}

Submodule preimage_of_span_multi(Ring ring, std::size_t dim,
                                 const std::vector<Matrix>& images,
                                 const std::vector<Submodule>& spans) {
    if (images.size() != spans.size()) throw domain_error("preimage_multi: arity mismatch");
    std::size_t total_cols = 0, extra_rows = 0;
    for (std::size_t t = 0; t < images.size(); ++t) {
        if (images[t].rows() != dim) throw domain_error("preimage_multi: image shape");
        total_cols += images[t].cols();
        extra_rows += spans[t].rank();
    }
    Matrix big(ring, dim + extra_rows, total_cols);
    std::size_t col0 = 0;
    std::size_t row0 = dim;
    for (std::size_t t = 0; t < images.size(); ++t) {
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < images[t].cols(); ++j)
                big.at(i, col0 + j) = images[t].at(i, j);
        for (std::size_t i = 0; i < spans[t].rank(); ++i)
            for (std::size_t j = 0; j < spans[t].ambient(); ++j)
                big.at(row0 + i, col0 + j) = spans[t].basis().at(i, j);
        col0 += images[t].cols();
        row0 += spans[t].rank();
    }
    Submodule ker = left_kernel(big);
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < ker.basis().rows(); ++i) {
        Vector full = ker.basis().row(i);
        gens.emplace_back(full.begin(), full.begin() + dim);
    }
    return Submodule::span(ring, dim, std::move(gens));
}

bool ModulePresentation::same_quotient(const ModulePresentation& o) const {
    if (free_rank != o.free_rank || invariant_factors.size() != o.invariant_factors.size())
        return false;
    for (std::size_t i = 0; i < invariant_factors.size(); ++i)
        if (invariant_factors[i] != o.invariant_factors[i]) return false;
    return true;
}

QuotientCoordinates quotient_coordinates(const Submodule& s) {
    const Ring ring = s.ring();
    const std::size_t n = s.ambient();
    QuotientCoordinates qc;
    if (s.rank() == 0) {
        qc.pres.generator_count = n;
        qc.pres.relation_rows = Matrix(ring, 0, n);
        qc.pres.free_rank = n;
        qc.forward = Matrix::identity(ring, n);
        qc.section = Matrix::identity(ring, n);
        return qc;
    }
    auto [d, u, v] = snf(s.basis());
    Matrix vinv = inverse_unimodular(v);
    std::vector<std::size_t> keep; // coordinates surviving in the quotient
    std::vector<Scalar> torsion;
    for (std::size_t i = 0; i < n; ++i) {
        Scalar di = (i < d.rows() && i < d.cols()) ? d.at(i, i) : Scalar::zero(ring);
        if (di.is_unit()) continue;
        keep.push_back(i);
        if (!di.is_zero()) torsion.push_back(di);
    }
    qc.pres.generator_count = keep.size();
    qc.pres.invariant_factors = torsion;
    qc.pres.free_rank = keep.size() - torsion.size();
    qc.pres.relation_rows = Matrix(ring, 0, keep.size());
    for (std::size_t j = 0; j < keep.size(); ++j) {
        std::size_t i = keep[j];
        Scalar di = (i < d.rows() && i < d.cols()) ? d.at(i, i) : Scalar::zero(ring);
        if (di.is_zero()) continue;
        Vector row = zero_vector(ring, keep.size());
        row[j] = di;
        qc.pres.relation_rows.append_row(row);
    }
    qc.forward = Matrix(ring, n, keep.size());
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t j = 0; j < keep.size(); ++j) qc.forward.at(r, j) = v.at(r, keep[j]);
    qc.section = Matrix(ring, keep.size(), n);
    for (std::size_t j = 0; j < keep.size(); ++j) qc.section.set_row(j, vinv.row(keep[j]));
    return qc;
}

ModulePresentation quotient_presentation(const Submodule& s) {
    return quotient_coordinates(s).pres;
}

} // namespace corank
