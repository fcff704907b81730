#include "berncert/multipoly.hpp"

#include <algorithm>
#include <sstream>

namespace berncert {

MultiPoly::MultiPoly(std::vector<std::string> vars, std::vector<int> degree_bounds)
    : vars_(std::move(vars)), bounds_(std::move(degree_bounds)) {
    if (vars_.size() != bounds_.size())
        throw std::invalid_argument("MultiPoly: vars/degree_bounds size mismatch");
    for (int b : bounds_)
        if (b < 0) throw std::invalid_argument("MultiPoly: negative degree bound");
    rebuild_strides();
}

void MultiPoly::rebuild_strides() {
    strides_.assign(vars_.size(), 1);
    std::size_t total = 1;
    for (std::size_t k = vars_.size(); k-- > 0;) {
        strides_[k] = total;
        total *= static_cast<std::size_t>(bounds_[k]) + 1;
    }
    coeffs_.assign(total, Rational(0));
}

std::size_t MultiPoly::flat_index(const std::vector<int>& exps) const {
    if (exps.size() != vars_.size()) throw std::invalid_argument("MultiPoly: exponent arity mismatch");
    std::size_t idx = 0;
    for (std::size_t k = 0; k < exps.size(); ++k) {
        if (exps[k] < 0 || exps[k] > bounds_[k])
            throw std::out_of_range("MultiPoly: exponent outside degree bound");
        idx += static_cast<std::size_t>(exps[k]) * strides_[k];
    }
    return idx;
}

Rational& MultiPoly::at(const std::vector<int>& exps) { return coeffs_[flat_index(exps)]; }
const Rational& MultiPoly::at(const std::vector<int>& exps) const { return coeffs_[flat_index(exps)]; }

int MultiPoly::var_index(const std::string& var) const {
    auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) throw std::invalid_argument("MultiPoly: unknown variable " + var);
    return static_cast<int>(it - vars_.begin());
}

int MultiPoly::true_degree(const std::string& var) const {
    const int axis = var_index(var);
    const std::size_t stride = strides_[axis];
    const std::size_t extent = static_cast<std::size_t>(bounds_[axis]) + 1;
    const std::size_t block = stride * extent;
    for (int e = bounds_[axis]; e >= 1; --e) {
        for (std::size_t base = 0; base < coeffs_.size(); base += block)
            for (std::size_t off = 0; off < stride; ++off)
                if (coeffs_[base + static_cast<std::size_t>(e) * stride + off] != 0) return e;
    }
    return 0;
}

bool MultiPoly::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

namespace {

void require_same_vars(const MultiPoly& p, const MultiPoly& q) {
    if (p.vars() != q.vars())
        throw std::invalid_argument("polynomial operation: variable lists differ");
}

// Iterates all exponent tuples of a bounds vector.
bool next_exps(std::vector<int>& e, const std::vector<int>& bounds) {
    for (std::size_t k = e.size(); k-- > 0;) {
        if (e[k] < bounds[k]) {
            ++e[k];
            std::fill(e.begin() + static_cast<long>(k) + 1, e.end(), 0);
            return true;
        }
    }
    return false;
}

std::vector<int> max_bounds(const MultiPoly& p, const MultiPoly& q) {
    std::vector<int> b(p.degree_bounds());
    for (std::size_t k = 0; k < b.size(); ++k) b[k] = std::max(b[k], q.degree_bounds()[k]);
    return b;
}

}  // namespace

bool poly_equal(const MultiPoly& p, const MultiPoly& q) {
    require_same_vars(p, q);
    const auto bounds = max_bounds(p, q);
    std::vector<int> e(bounds.size(), 0);
    do {
        bool in_p = true, in_q = true;
        for (std::size_t k = 0; k < e.size(); ++k) {
            in_p = in_p && e[k] <= p.degree_bounds()[k];
            in_q = in_q && e[k] <= q.degree_bounds()[k];
        }
        const Rational cp = in_p ? p.at(e) : Rational(0);
        const Rational cq = in_q ? q.at(e) : Rational(0);
        if (cp != cq) return false;
    } while (next_exps(e, bounds));
    return true;
}

MultiPoly poly_add(const MultiPoly& p, const MultiPoly& q) {
    require_same_vars(p, q);
    MultiPoly out(p.vars(), max_bounds(p, q));
    std::vector<int> e(out.var_count(), 0);
    do {
        bool in_p = true, in_q = true;
        for (std::size_t k = 0; k < e.size(); ++k) {
            in_p = in_p && e[k] <= p.degree_bounds()[k];
            in_q = in_q && e[k] <= q.degree_bounds()[k];
        }
        Rational c = in_p ? p.at(e) : Rational(0);
        if (in_q) c += q.at(e);
        if (c != 0) out.at(e) = c;
    } while (next_exps(e, out.degree_bounds()));
    return out;
}

MultiPoly poly_neg(const MultiPoly& p) { return poly_scale(p, Rational(-1)); }

MultiPoly poly_sub(const MultiPoly& p, const MultiPoly& q) { return poly_add(p, poly_neg(q)); }

MultiPoly poly_scale(const MultiPoly& p, const Rational& s) {
    MultiPoly out(p.vars(), p.degree_bounds());
    std::vector<int> e(out.var_count(), 0);
    do {
        const Rational& c = p.at(e);
        if (c != 0) out.at(e) = c * s;
    } while (next_exps(e, out.degree_bounds()));
    return out;
}

MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q) {
    require_same_vars(p, q);
    std::vector<int> bounds(p.degree_bounds());
    for (std::size_t k = 0; k < bounds.size(); ++k) bounds[k] += q.degree_bounds()[k];
    MultiPoly out(p.vars(), bounds);
    std::vector<int> ep(p.var_count(), 0);
    do {
        const Rational& cp = p.at(ep);
        if (cp == 0) continue;
        std::vector<int> eq(q.var_count(), 0);
        do {
            const Rational& cq = q.at(eq);
            if (cq == 0) continue;
            std::vector<int> er(ep);
            for (std::size_t k = 0; k < er.size(); ++k) er[k] += eq[k];
            out.at(er) += cp * cq;
        } while (next_exps(eq, q.degree_bounds()));
    } while (next_exps(ep, p.degree_bounds()));
    return out;
}

MultiPoly poly_const(const std::vector<std::string>& vars, const Rational& c) {
    MultiPoly out(vars, std::vector<int>(vars.size(), 0));
    out.at(std::vector<int>(vars.size(), 0)) = c;
    return out;
}

MultiPoly poly_var(const std::vector<std::string>& vars, const std::string& var, int power) {
    std::vector<int> exps(vars.size(), 0);
    MultiPoly probe(vars, exps);
    exps[static_cast<std::size_t>(probe.var_index(var))] = power;
    return poly_term(vars, exps, Rational(1));
}

MultiPoly poly_term(const std::vector<std::string>& vars, const std::vector<int>& exps,
                    const Rational& c) {
    MultiPoly out(vars, exps);
    out.at(exps) = c;
    return out;
}

Rational poly_eval(const MultiPoly& p, const std::vector<Rational>& point) {
    if (point.size() != p.var_count())
        throw std::invalid_argument("poly_eval: point arity mismatch");
    // Horner along the last axis, folding axes from the back.
    const auto& bounds = p.degree_bounds();
    std::vector<Rational> buf(p.coeffs());
    std::size_t width = buf.size();
    for (std::size_t k = p.var_count(); k-- > 0;) {
        const std::size_t extent = static_cast<std::size_t>(bounds[k]) + 1;
        width /= extent;
        for (std::size_t slot = 0; slot < width; ++slot) {
            Rational acc = buf[slot * extent + extent - 1];
            for (std::size_t e = extent - 1; e-- > 0;) acc = acc * point[k] + buf[slot * extent + e];
            buf[slot] = std::move(acc);
        }
    }
    return buf[0];
}

MultiPoly affine_substitute(const MultiPoly& p, const std::string& var, const Rational& scale,
                            const Rational& offset) {
    const int axis = p.var_index(var);
    MultiPoly out(p.vars(), p.degree_bounds());
    for (const auto& v : p.collapsed_vars()) out.note_collapsed(v);

    // (offset + scale*y)^n expanded once per exponent via the binomial rule.
    const int n_max = p.degree_bounds()[static_cast<std::size_t>(axis)];
    std::vector<std::vector<Rational>> expansion(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        expansion[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n) + 1, Rational(0));
        Rational binom(1);
        for (int s = 0; s <= n; ++s) {
            Rational c = binom;
            for (int k = 0; k < s; ++k) c *= scale;
            for (int k = 0; k < n - s; ++k) c *= offset;
            expansion[static_cast<std::size_t>(n)][static_cast<std::size_t>(s)] = c;
            binom = binom * (n - s) / (s + 1);
        }
    }

    std::vector<int> e(p.var_count(), 0);
    do {
        const Rational& c = p.at(e);
        if (c == 0) continue;
        const int n = e[static_cast<std::size_t>(axis)];
        std::vector<int> er(e);
        for (int s = 0; s <= n; ++s) {
            const Rational& w = expansion[static_cast<std::size_t>(n)][static_cast<std::size_t>(s)];
            if (w == 0) continue;
            er[static_cast<std::size_t>(axis)] = s;
            out.at(er) += c * w;
        }
    } while (next_exps(e, p.degree_bounds()));

    if (scale == 0) out.note_collapsed(var);
    return out;
}

MultiPoly poly_derivative(const MultiPoly& p, const std::string& var) {
    const int axis = p.var_index(var);
    MultiPoly out(p.vars(), p.degree_bounds());
    std::vector<int> e(p.var_count(), 0);
    do {
        const Rational& c = p.at(e);
        if (c == 0 || e[static_cast<std::size_t>(axis)] == 0) continue;
        std::vector<int> er(e);
        er[static_cast<std::size_t>(axis)] -= 1;
        out.at(er) += c * e[static_cast<std::size_t>(axis)];
    } while (next_exps(e, p.degree_bounds()));
    return out;
}

MultiPoly poly_coeff(const MultiPoly& p, const std::string& var, int k) {
    if (p.var_count() < 2)
        throw std::invalid_argument("poly_coeff: need a variable left after extraction");
    const auto axis = static_cast<std::size_t>(p.var_index(var));
    std::vector<std::string> vars;
    std::vector<int> bounds;
    for (std::size_t i = 0; i < p.var_count(); ++i) {
        if (i == axis) continue;
        vars.push_back(p.vars()[i]);
        bounds.push_back(p.degree_bounds()[i]);
    }
    MultiPoly out(vars, bounds);
    if (k < 0 || k > p.degree_bounds()[axis]) return out;
    std::vector<int> e(p.var_count(), 0);
    do {
        if (e[axis] != k) continue;
        const Rational& c = p.at(e);
        if (c == 0) continue;
        std::vector<int> er;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (i != axis) er.push_back(e[i]);
        out.at(er) = c;
    } while (next_exps(e, p.degree_bounds()));
    return out;
}

MultiPoly poly_drop_var(const MultiPoly& p, const std::string& var) {
    if (p.true_degree(var) != 0)
        throw std::invalid_argument("poly_drop_var: variable still occurs: " + var);
    return poly_coeff(p, var, 0);
}

MultiPoly poly_rename_var(const MultiPoly& p, const std::string& from, const std::string& to) {
    const auto axis = static_cast<std::size_t>(p.var_index(from));
    for (const auto& v : p.vars())
        if (v == to) throw std::invalid_argument("poly_rename_var: name already used: " + to);
    std::vector<std::string> vars = p.vars();
    vars[axis] = to;
    MultiPoly out(vars, p.degree_bounds());
    std::vector<int> e(p.var_count(), 0);
    do {
        const Rational& c = p.at(e);
        if (c != 0) out.at(e) = c;
    } while (next_exps(e, p.degree_bounds()));
    for (const auto& v : p.collapsed_vars()) out.note_collapsed(v == from ? to : v);
    return out;
}

nlohmann::ordered_json poly_to_json(const MultiPoly& p) {
    nlohmann::ordered_json j;
    j["vars"] = p.vars();
    auto terms = nlohmann::ordered_json::array();
    std::vector<int> e(p.var_count(), 0);
    if (!p.coeffs().empty()) do {
            const Rational& c = p.at(e);
            if (c == 0) continue;
            nlohmann::ordered_json term;
            term["e"] = e;
            term["num"] = numerator(c).str();
            term["den"] = denominator(c).str();
            terms.push_back(std::move(term));
        } while (next_exps(e, p.degree_bounds()));
    j["terms"] = std::move(terms);
    return j;
}

MultiPoly poly_from_json(const nlohmann::json& j) {
    if (!j.contains("vars") || !j.contains("terms"))
        throw std::invalid_argument("poly_from_json: missing vars/terms");
    const std::vector<std::string> vars = j["vars"].get<std::vector<std::string>>();
    std::vector<int> bounds(vars.size(), 0);
    for (const auto& term : j["terms"]) {
        const auto e = term["e"].get<std::vector<int>>();
        if (e.size() != vars.size()) throw std::invalid_argument("poly_from_json: exponent arity");
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] < 0) throw std::invalid_argument("poly_from_json: negative exponent");
            bounds[k] = std::max(bounds[k], e[k]);
        }
    }
    MultiPoly out(vars, bounds);
    for (const auto& term : j["terms"]) {
        const auto e = term["e"].get<std::vector<int>>();
        const Integer num{term["num"].get<std::string>()};
        const Integer den{term["den"].get<std::string>()};
        out.at(e) += rat_normalize(num, den);
    }
    return out;
}

std::string poly_str(const MultiPoly& p) {
    std::ostringstream os;
    bool first = true;
    std::vector<int> e(p.var_count(), 0);
    do {
        const Rational& c = p.at(e);
        if (c == 0) continue;
        if (!first) os << (c.sign() > 0 ? " + " : " - ");
        else if (c.sign() < 0) os << "-";
        first = false;
        const Rational mag = c.sign() < 0 ? Rational(-c) : c;
        bool printed = false;
        if (mag != 1) {
            os << rat_str(mag);
            printed = true;
        }
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (printed) os << "*";
            os << p.vars()[k];
            if (e[k] > 1) os << "^" << e[k];
            printed = true;
        }
        if (!printed) os << rat_str(mag);
    } while (next_exps(e, p.degree_bounds()));
    if (first) os << "0";
    return os.str();
}

}  // namespace berncert
