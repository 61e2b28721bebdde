#include "tuttekit/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

#include "tuttekit/errors.hpp"

namespace tuttekit {

namespace {

std::string join(const std::vector<std::string> &v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + v[i];
    }
    return s + "]";
}

} // namespace

MultiPoly::MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {
    if (vars_.size() > kMaxVars) {
        throw StructuralError("MultiPoly supports at most 6 variables, got " + join(vars_));
    }
}

MultiPoly MultiPoly::constant(std::vector<std::string> vars, const Rational &c) {
    MultiPoly p(std::move(vars));
    if (!c.is_zero()) {
        p.terms_.emplace_back(0, c);
    }
    return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, const std::string &name) {
    MultiPoly p(std::move(vars));
    Exponents e(p.num_vars(), 0);
    e[p.var_index(name)] = 1;
    p.terms_.emplace_back(p.pack(e), Rational(1));
    return p;
}

MultiPoly MultiPoly::monomial(std::vector<std::string> vars, const Exponents &exps,
                              const Rational &c) {
    MultiPoly p(std::move(vars));
    if (!c.is_zero()) {
        p.terms_.emplace_back(p.pack(exps), c);
    }
    return p;
}

std::size_t MultiPoly::var_index(const std::string &name) const {
    const auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) {
        throw StructuralError("variable '" + name + "' not in " + join(vars_));
    }
    return static_cast<std::size_t>(it - vars_.begin());
}

unsigned MultiPoly::field_shift(std::size_t var) const {
    return kBitsPerVar * static_cast<unsigned>(vars_.size() - 1 - var);
}

unsigned MultiPoly::exponent_of(Key key, std::size_t var) const {
    return static_cast<unsigned>((key >> field_shift(var)) & kMaxExponent);
}

MultiPoly::Key MultiPoly::pack(const Exponents &exps) const {
    if (exps.size() != vars_.size()) {
        throw StructuralError("exponent vector length " + std::to_string(exps.size()) +
                              " does not match variables " + join(vars_));
    }
    Key key = 0;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] > kMaxExponent) {
            throw CapacityError("exponent " + std::to_string(exps[i]) + " exceeds packing limit");
        }
        key |= static_cast<Key>(exps[i]) << field_shift(i);
    }
    return key;
}

Exponents MultiPoly::unpack(Key key) const {
    Exponents e(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        e[i] = exponent_of(key, i);
    }
    return e;
}

MultiPoly MultiPoly::from_raw(std::vector<std::string> vars,
                              std::vector<std::pair<Key, Rational>> terms) {
    MultiPoly p(std::move(vars));
    std::sort(terms.begin(), terms.end(),
              [](const auto &a, const auto &b) { return a.first < b.first; });
    for (auto &t : terms) {
        if (!p.terms_.empty() && p.terms_.back().first == t.first) {
            p.terms_.back().second += t.second;
            if (p.terms_.back().second.is_zero()) {
                p.terms_.pop_back();
            }
        } else if (!t.second.is_zero()) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
}

Rational MultiPoly::constant_term() const {
    if (!terms_.empty() && terms_[0].first == 0) {
        return terms_[0].second;
    }
    return Rational(0);
}

Rational MultiPoly::coeff(const Exponents &exps) const {
    const Key key = pack(exps);
    const auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                                     [](const auto &t, Key k) { return t.first < k; });
    if (it != terms_.end() && it->first == key) {
        return it->second;
    }
    return Rational(0);
}

std::vector<std::pair<Exponents, Rational>> MultiPoly::terms() const {
    std::vector<std::pair<Exponents, Rational>> out;
    out.reserve(terms_.size());
    for (const auto &[k, c] : terms_) {
        out.emplace_back(unpack(k), c);
    }
    std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) {
        const auto da = std::accumulate(a.first.begin(), a.first.end(), 0u);
        const auto db = std::accumulate(b.first.begin(), b.first.end(), 0u);
        if (da != db) {
            return da < db;
        }
        return a.first > b.first;
    });
    return out;
}

unsigned MultiPoly::degree(std::size_t var) const {
    unsigned d = 0;
    for (const auto &t : terms_) {
        d = std::max(d, exponent_of(t.first, var));
    }
    return d;
}

unsigned MultiPoly::total_degree() const {
    unsigned d = 0;
    for (const auto &t : terms_) {
        unsigned s = 0;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            s += exponent_of(t.first, i);
        }
        d = std::max(d, s);
    }
    return d;
}

bool MultiPoly::has_integer_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto &t) { return t.second.is_integer(); });
}

MultiPoly MultiPoly::with_vars(const std::vector<std::string> &vars) const {
    if (vars == vars_) {
        return *this;
    }
    MultiPoly out(vars);
    std::vector<std::size_t> target(vars_.size());
    std::vector<bool> used(vars_.size(), false);
    for (const auto &t : terms_) {
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (exponent_of(t.first, i) != 0) {
                used[i] = true;
            }
        }
    }
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        const auto it = std::find(vars.begin(), vars.end(), vars_[i]);
        if (it == vars.end()) {
            if (used[i]) {
                throw StructuralError("variable '" + vars_[i] + "' missing from target " +
                                      join(vars));
            }
            target[i] = vars.size();
        } else {
            target[i] = static_cast<std::size_t>(it - vars.begin());
        }
    }
    std::vector<std::pair<Key, Rational>> raw;
    raw.reserve(terms_.size());
    for (const auto &t : terms_) {
        Exponents e(vars.size(), 0);
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (target[i] < vars.size()) {
                e[target[i]] = exponent_of(t.first, i);
            }
        }
        raw.emplace_back(out.pack(e), t.second);
    }
    return from_raw(vars, std::move(raw));
}

Rational MultiPoly::evaluate(const std::map<std::string, Rational> &point) const {
    std::vector<Rational> values(vars_.size());
    std::vector<bool> needed(vars_.size(), false);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        needed[i] = degree(i) > 0;
        const auto it = point.find(vars_[i]);
        if (it != point.end()) {
            values[i] = it->second;
        } else if (needed[i]) {
            throw PreconditionError("no value bound for variable '" + vars_[i] + "'");
        }
    }
    Rational sum(0);
    for (const auto &t : terms_) {
        Rational term = t.second;
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            const unsigned e = exponent_of(t.first, i);
            if (e != 0) {
                term *= tuttekit::pow(values[i], e);
            }
        }
        sum += term;
    }
    return sum;
}

MultiPoly MultiPoly::coefficient_of(const std::string &var, unsigned k) const {
    const std::size_t v = var_index(var);
    std::vector<std::pair<Key, Rational>> raw;
    for (const auto &t : terms_) {
        if (exponent_of(t.first, v) == k) {
            raw.emplace_back(t.first & ~(static_cast<Key>(kMaxExponent) << field_shift(v)),
                             t.second);
        }
    }
    return from_raw(vars_, std::move(raw));
}

void MultiPoly::check_same_vars(const MultiPoly &o, const char *op) const {
    if (vars_ != o.vars_) {
        throw StructuralError(std::string("variable-list mismatch in ") + op + ": " +
                              join(vars_) + " vs " + join(o.vars_));
    }
}

MultiPoly &MultiPoly::operator+=(const MultiPoly &o) {
    check_same_vars(o, "add");
    std::vector<std::pair<Key, Rational>> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
            merged.push_back(std::move(terms_[i++]));
        } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
            merged.push_back(o.terms_[j++]);
        } else {
            Rational c = terms_[i].second + o.terms_[j].second;
            if (!c.is_zero()) {
                merged.emplace_back(terms_[i].first, std::move(c));
            }
            ++i;
            ++j;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

MultiPoly operator-(const MultiPoly &a) {
    MultiPoly r = a;
    for (auto &t : r.terms_) {
        t.second = -t.second;
    }
    return r;
}

MultiPoly &MultiPoly::operator-=(const MultiPoly &o) { return *this += -o; }

MultiPoly &MultiPoly::operator*=(const Rational &c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto &t : terms_) {
        t.second *= c;
    }
    return *this;
}

MultiPoly operator*(const MultiPoly &a, const MultiPoly &b) {
    a.check_same_vars(b, "mul");
    MultiPoly out(a.vars_);
    if (a.is_zero() || b.is_zero()) {
        return out;
    }
    for (std::size_t v = 0; v < a.vars_.size(); ++v) {
        if (a.degree(v) + b.degree(v) > MultiPoly::kMaxExponent) {
            throw CapacityError("product degree in '" + a.vars_[v] + "' exceeds packing limit");
        }
    }
    if (a.terms_.size() == 1 || b.terms_.size() == 1) {
        const MultiPoly &single = a.terms_.size() == 1 ? a : b;
        const MultiPoly &other = a.terms_.size() == 1 ? b : a;
        const auto &[sk, sc] = single.terms_[0];
        out.terms_.reserve(other.terms_.size());
        for (const auto &[k, c] : other.terms_) {
            out.terms_.emplace_back(k + sk, c * sc); // shifting preserves order
        }
        return out;
    }
    std::vector<std::tuple<MultiPoly::Key, std::uint32_t, std::uint32_t>> prods;
    prods.reserve(a.terms_.size() * b.terms_.size());
    for (std::uint32_t i = 0; i < a.terms_.size(); ++i) {
        for (std::uint32_t j = 0; j < b.terms_.size(); ++j) {
            prods.emplace_back(a.terms_[i].first + b.terms_[j].first, i, j);
        }
    }
    std::sort(prods.begin(), prods.end(),
              [](const auto &x, const auto &y) { return std::get<0>(x) < std::get<0>(y); });
    mpq_class acc;
    mpq_class tmp;
    std::size_t k = 0;
    while (k < prods.size()) {
        const auto key = std::get<0>(prods[k]);
        acc = 0;
        while (k < prods.size() && std::get<0>(prods[k]) == key) {
            mpq_mul(tmp.get_mpq_t(), a.terms_[std::get<1>(prods[k])].second.raw().get_mpq_t(),
                    b.terms_[std::get<2>(prods[k])].second.raw().get_mpq_t());
            acc += tmp;
            ++k;
        }
        if (sgn(acc) != 0) {
            out.terms_.emplace_back(key, Rational(acc));
        }
    }
    return out;
}

MultiPoly &MultiPoly::operator*=(const MultiPoly &o) {
    *this = *this * o;
    return *this;
}

bool operator==(const MultiPoly &a, const MultiPoly &b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly result = constant(vars_, Rational(1));
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1u) {
            result *= base;
        }
        e >>= 1;
        if (e > 0) {
            base *= base;
        }
    }
    return result;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto &[exps, c] : terms()) {
        std::string mono;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) {
                continue;
            }
            if (!mono.empty()) {
                mono += "*";
            }
            mono += vars_[i];
            if (exps[i] > 1) {
                mono += "^" + std::to_string(exps[i]);
            }
        }
        const Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            os << (c.sign() < 0 ? "-" : "");
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        if (mono.empty()) {
            os << mag;
        } else if (mag.is_one()) {
            os << mono;
        } else {
            os << mag << "*" << mono;
        }
    }
    return os.str();
}

MultiPoly substitute(const MultiPoly &p, const std::map<std::string, MultiPoly> &bindings,
                     const std::vector<std::string> &result_vars) {
    const auto &vars = p.vars();
    std::vector<MultiPoly> images;
    images.reserve(vars.size());
    for (const auto &v : vars) {
        const auto it = bindings.find(v);
        if (it != bindings.end()) {
            images.push_back(it->second.with_vars(result_vars));
        } else if (p.degree(v) == 0) {
            images.emplace_back(result_vars);
        } else {
            images.push_back(MultiPoly::variable(result_vars, v));
        }
    }
    // Power caches per variable.
    std::vector<std::vector<MultiPoly>> powers(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
        const unsigned d = p.degree(i);
        powers[i].push_back(MultiPoly::constant(result_vars, Rational(1)));
        for (unsigned k = 1; k <= d; ++k) {
            powers[i].push_back(powers[i].back() * images[i]);
        }
    }
    MultiPoly out(result_vars);
    for (const auto &[key, c] : p.raw_terms()) {
        const Exponents e = p.unpack(key);
        MultiPoly term = MultiPoly::constant(result_vars, c);
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (e[i] != 0) {
                term *= powers[i][e[i]];
            }
        }
        out += term;
    }
    return out;
}

MultiPoly divide_exact(const MultiPoly &p, const MultiPoly &d) {
    if (p.vars() != d.vars()) {
        throw StructuralError("variable-list mismatch in divide_exact");
    }
    if (d.is_zero()) {
        throw DivisionError("division by the zero polynomial");
    }
    const auto &vars = p.vars();
    const auto &[dkey, dcoeff] = d.raw_terms().back();
    const Exponents dexp = d.unpack(dkey);
    MultiPoly rem = p;
    std::vector<std::pair<MultiPoly::Key, Rational>> quotient;
    while (!rem.is_zero()) {
        const auto &[rkey, rcoeff] = rem.raw_terms().back();
        const Exponents rexp = rem.unpack(rkey);
        Exponents qexp(vars.size());
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (rexp[i] < dexp[i]) {
                throw DivisionError("polynomial " + d.to_string() + " does not divide " +
                                    p.to_string());
            }
            qexp[i] = rexp[i] - dexp[i];
        }
        const Rational qc = rcoeff / dcoeff;
        quotient.emplace_back(p.pack(qexp), qc);
        rem -= MultiPoly::monomial(vars, qexp, qc) * d;
    }
    return MultiPoly::from_raw(vars, std::move(quotient));
}

} // namespace tuttekit
