#include "superhowe/superpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace superhowe {

MonoProduct mono_mul(const SuperMonomial& a, const SuperMonomial& b) {
    if (a.even.size() != b.even.size())
        throw std::invalid_argument("mono_mul: variable space mismatch");
    SuperMonomial out(static_cast<int>(a.even.size()));
    for (std::size_t i = 0; i < a.even.size(); ++i) out.even[i] = a.even[i] + b.even[i];

    // Merge the ascending eta lists; each element of b.odd jumped over by a
    // larger element of a.odd costs one transposition.
    out.odd.reserve(a.odd.size() + b.odd.size());
    std::size_t i = 0, j = 0;
    long inversions = 0;
    while (i < a.odd.size() && j < b.odd.size()) {
        if (a.odd[i] == b.odd[j]) return {0, SuperMonomial(0)};
        if (a.odd[i] < b.odd[j]) {
            out.odd.push_back(a.odd[i++]);
        } else {
            inversions += static_cast<long>(a.odd.size() - i);
            out.odd.push_back(b.odd[j++]);
        }
    }
    while (i < a.odd.size()) out.odd.push_back(a.odd[i++]);
    while (j < b.odd.size()) out.odd.push_back(b.odd[j++]);
    return {inversions % 2 == 0 ? 1 : -1, std::move(out)};
}

SuperPoly SuperPoly::constant(const VarSpace& vs, const Rational& c) {
    SuperPoly p;
    p.add_term(SuperMonomial(vs.num_vars()), c);
    return p;
}

SuperPoly SuperPoly::monomial(SuperMonomial m, const Rational& c) {
    SuperPoly p;
    p.add_term(m, c);
    return p;
}

SuperPoly SuperPoly::x(const VarSpace& vs, int i, int power) {
    if (i < 1 || i > vs.num_vars()) throw std::invalid_argument("x: index out of range");
    if (power < 0) throw std::invalid_argument("x: negative power");
    SuperMonomial m(vs.num_vars());
    m.even[i - 1] = power;
    return monomial(std::move(m));
}

SuperPoly SuperPoly::eta(const VarSpace& vs, int i) {
    if (i < 1 || i > vs.num_vars()) throw std::invalid_argument("eta: index out of range");
    SuperMonomial m(vs.num_vars());
    m.odd = {i};
    return monomial(std::move(m));
}

int SuperPoly::degree() const {
    if (terms_.empty()) throw std::invalid_argument("degree: zero polynomial");
    const int d = terms_.begin()->first.degree();
    if (terms_.rbegin()->first.degree() != d)
        throw std::invalid_argument("degree: polynomial is not homogeneous");
    return d;
}

bool SuperPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

int SuperPoly::parity() const {
    if (terms_.empty()) return 0;
    const int p = terms_.begin()->first.parity();
    for (const auto& [m, c] : terms_)
        if (m.parity() != p) return -1;
    return p;
}

void SuperPoly::add_term(const SuperMonomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational SuperPoly::coeff(const SuperMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

const std::pair<const SuperMonomial, Rational>& SuperPoly::leading() const {
    if (terms_.empty()) throw std::invalid_argument("leading: zero polynomial");
    return *terms_.begin();
}

SuperPoly SuperPoly::operator-() const {
    SuperPoly p;
    for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
    return p;
}

SuperPoly& SuperPoly::operator+=(const SuperPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

SuperPoly& SuperPoly::operator-=(const SuperPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

SuperPoly SuperPoly::scaled(const Rational& c) const {
    SuperPoly p;
    if (c.is_zero()) return p;
    for (const auto& [m, v] : terms_) p.terms_.emplace(m, v * c);
    return p;
}

SuperPoly poly_mul(const SuperPoly& p, const SuperPoly& q) {
    SuperPoly out;
    for (const auto& [mp, cp] : p.terms())
        for (const auto& [mq, cq] : q.terms()) {
            MonoProduct prod = mono_mul(mp, mq);
            if (prod.sign == 0) continue;
            out.add_term(prod.mono, cp * cq * Rational(prod.sign));
        }
    return out;
}

namespace {

void even_exponents_rec(int vars, int remaining, std::vector<int>& cur,
                        std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == vars - 1) {
        cur.push_back(remaining);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        cur.push_back(e);
        even_exponents_rec(vars, remaining - e, cur, out);
        cur.pop_back();
    }
}

void odd_subsets_rec(int max_index, int size, int start, std::vector<int>& cur,
                     std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == size) {
        out.push_back(cur);
        return;
    }
    for (int i = start; i <= max_index; ++i) {
        cur.push_back(i);
        odd_subsets_rec(max_index, size, i + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<SuperMonomial> basis_of_degree(const VarSpace& vs, int d) {
    if (d < 0) throw std::invalid_argument("basis_of_degree: negative degree");
    const int v = vs.num_vars();
    std::vector<SuperMonomial> basis;
    for (int b = 0; b <= std::min(d, v); ++b) {
        std::vector<std::vector<int>> subsets;
        std::vector<int> cur;
        odd_subsets_rec(v, b, 1, cur, subsets);
        std::vector<std::vector<int>> exps;
        cur.clear();
        even_exponents_rec(v, d - b, cur, exps);
        for (auto& s : subsets)
            for (auto& e : exps) basis.emplace_back(e, s);
    }
    std::sort(basis.begin(), basis.end(), [](const SuperMonomial& a, const SuperMonomial& b) {
        return MonoOrder()(a, b);
    });
    return basis;
}

long dim_of_degree(const VarSpace& vs, int d) {
    // sum_b C(2n+1, b) * C(d-b+2n, 2n)
    const int v = vs.num_vars();
    auto binom = [](long n, long k) {
        if (k < 0 || k > n) return 0L;
        long r = 1;
        for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return r;
    };
    long total = 0;
    for (int b = 0; b <= std::min(d, v); ++b)
        total += binom(v, b) * binom(d - b + v - 1, v - 1);
    return total;
}

std::vector<Rational> coords(const SuperPoly& p, const std::vector<SuperMonomial>& basis) {
    std::map<SuperMonomial, std::size_t, MonoOrder> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
    std::vector<Rational> v(basis.size());
    for (const auto& [m, c] : p.terms()) {
        auto it = index.find(m);
        if (it == index.end())
            throw std::invalid_argument("coords: monomial not in basis (degree mismatch?)");
        v[it->second] = c;
    }
    return v;
}

namespace {

std::string monomial_str(const SuperMonomial& m) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < m.even.size(); ++i) {
        if (m.even[i] == 0) continue;
        if (!first) os << ' ';
        first = false;
        os << 'x' << (i + 1);
        if (m.even[i] > 1) os << '^' << m.even[i];
    }
    for (int i : m.odd) {
        if (!first) os << ' ';
        first = false;
        os << 'e' << i;
    }
    return os.str();
}

}  // namespace

std::string to_string(const SuperPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        const Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << '-';
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        const std::string ms = monomial_str(m);
        if (ms.empty()) {
            os << a.str();
        } else if (a == Rational(1)) {
            os << ms;
        } else {
            os << a.str() << " * " << ms;
        }
    }
    return os.str();
}

namespace {

// One term of the canonical text form: [coeff *] factors.
void parse_term(const std::string& term, int sign, const VarSpace& vs, SuperPoly& out) {
    std::istringstream is(term);
    std::vector<std::string> tokens;
    std::string tok;
    while (is >> tok) tokens.push_back(tok);
    if (tokens.empty()) throw std::invalid_argument("parse_poly: empty term");

    Rational c(1);
    std::size_t pos = 0;
    // A leading sign may be glued to either a number ("-3/2") or directly to
    // the first factor ("-x1", printed for coefficient -1).
    if (tokens[0].size() > 1 && tokens[0][0] == '-' && (tokens[0][1] == 'x' || tokens[0][1] == 'e')) {
        c = Rational(-1);
        tokens[0] = tokens[0].substr(1);
    } else if (tokens[0][0] == '-' || tokens[0][0] == '+' || (tokens[0][0] >= '0' && tokens[0][0] <= '9')) {
        c = Rational::from_string(tokens[0]);
        pos = 1;
        if (pos < tokens.size()) {
            if (tokens[pos] != "*")
                throw std::invalid_argument("parse_poly: expected '*' after coefficient");
            ++pos;
        }
    }
    SuperMonomial m(vs.num_vars());
    for (; pos < tokens.size(); ++pos) {
        const std::string& f = tokens[pos];
        if (f.size() < 2 || (f[0] != 'x' && f[0] != 'e'))
            throw std::invalid_argument("parse_poly: bad factor '" + f + "'");
        const std::size_t caret = f.find('^');
        const int idx = std::stoi(f.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
        if (idx < 1 || idx > vs.num_vars())
            throw std::invalid_argument("parse_poly: variable index out of range in '" + f + "'");
        if (f[0] == 'x') {
            const int e = caret == std::string::npos ? 1 : std::stoi(f.substr(caret + 1));
            m.even[idx - 1] += e;
        } else {
            if (caret != std::string::npos)
                throw std::invalid_argument("parse_poly: eta with exponent in '" + f + "'");
            if (std::find(m.odd.begin(), m.odd.end(), idx) != m.odd.end())
                throw std::invalid_argument("parse_poly: repeated eta in '" + f + "'");
            m.odd.push_back(idx);
        }
    }
    std::sort(m.odd.begin(), m.odd.end());
    out.add_term(m, c * Rational(sign));
}

}  // namespace

SuperPoly parse_poly(const std::string& text, const VarSpace& vs) {
    SuperPoly out;
    if (text == "0") return out;
    std::size_t start = 0;
    int sign = 1;
    // Split on top-level " + " / " - " separators.
    for (std::size_t i = 0; i + 2 < text.size();) {
        if (text[i] == ' ' && (text[i + 1] == '+' || text[i + 1] == '-') && text[i + 2] == ' ') {
            parse_term(text.substr(start, i - start), sign, vs, out);
            sign = text[i + 1] == '-' ? -1 : 1;
            start = i + 3;
            i += 3;
        } else {
            ++i;
        }
    }
    parse_term(text.substr(start), sign, vs, out);
    return out;
}

}  // namespace superhowe
