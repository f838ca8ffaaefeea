#include "superhowe/diffops.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace superhowe {

namespace {

int word_parity(const OpWord& w) {
    int p = 0;
    for (const PrimOp& op : w) p ^= op.parity();
    return p;
}

}  // namespace

DiffOp DiffOp::word(OpWord w, const Rational& c) {
    DiffOp op;
    op.add_word(std::move(w), c);
    return op;
}

int DiffOp::parity() const {
    if (terms_.empty()) return 0;
    const int p = word_parity(terms_.begin()->first);
    for (const auto& [w, c] : terms_)
        if (word_parity(w) != p) return -1;
    return p;
}

void DiffOp::add_word(const OpWord& w, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DiffOp DiffOp::operator-() const {
    DiffOp o;
    for (const auto& [w, c] : terms_) o.terms_.emplace(w, -c);
    return o;
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
    for (const auto& [w, c] : o.terms_) add_word(w, c);
    return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
    for (const auto& [w, c] : o.terms_) add_word(w, -c);
    return *this;
}

DiffOp DiffOp::scaled(const Rational& c) const {
    DiffOp o;
    if (c.is_zero()) return o;
    for (const auto& [w, v] : terms_) o.terms_.emplace(w, v * c);
    return o;
}

SuperPoly apply(const PrimOp& op, const SuperPoly& p) {
    SuperPoly out;
    const int idx = op.index - 1;
    for (const auto& [m, c] : p.terms()) {
        switch (op.kind) {
            case PrimOp::Kind::MulX: {
                SuperMonomial r = m;
                ++r.even[idx];
                out.add_term(r, c);
                break;
            }
            case PrimOp::Kind::DelX: {
                if (m.even[idx] == 0) break;
                SuperMonomial r = m;
                --r.even[idx];
                out.add_term(r, c * Rational(m.even[idx]));
                break;
            }
            case PrimOp::Kind::MulEta: {
                auto pos = std::lower_bound(m.odd.begin(), m.odd.end(), op.index);
                if (pos != m.odd.end() && *pos == op.index) break;  // eta^2 = 0
                SuperMonomial r = m;
                const long before = pos - m.odd.begin();
                r.odd.insert(r.odd.begin() + before, op.index);
                out.add_term(r, before % 2 == 0 ? c : -c);
                break;
            }
            case PrimOp::Kind::DelEta: {
                auto pos = std::lower_bound(m.odd.begin(), m.odd.end(), op.index);
                if (pos == m.odd.end() || *pos != op.index) break;
                SuperMonomial r = m;
                const long at = pos - m.odd.begin();  // 0-based position p-1
                r.odd.erase(r.odd.begin() + at);
                out.add_term(r, at % 2 == 0 ? c : -c);
                break;
            }
        }
    }
    return out;
}

SuperPoly apply(const DiffOp& op, const SuperPoly& p) {
    SuperPoly out;
    for (const auto& [w, c] : op.terms()) {
        SuperPoly cur = p;
        for (auto it = w.rbegin(); it != w.rend() && !cur.is_zero(); ++it)
            cur = apply(*it, cur);
        out += cur.scaled(c);
    }
    return out;
}

DiffOp compose(const DiffOp& a, const DiffOp& b) {
    DiffOp out;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            OpWord w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add_word(w, ca * cb);
        }
    return out;
}

DiffOp supercommutator(const DiffOp& a, const DiffOp& b) {
    const int pa = a.parity(), pb = b.parity();
    if (pa < 0 || pb < 0)
        throw std::invalid_argument("supercommutator: operators must be parity-homogeneous");
    DiffOp out = compose(a, b);
    const DiffOp ba = compose(b, a);
    if (pa == 1 && pb == 1)
        out += ba;
    else
        out -= ba;
    return out;
}

bool op_equal_on_degree(const DiffOp& a, const DiffOp& b, int dmax, const VarSpace& vs) {
    for (int d = 0; d <= dmax; ++d)
        for (const SuperMonomial& m : basis_of_degree(vs, d)) {
            const SuperPoly v = SuperPoly::monomial(m);
            if (apply(a, v) != apply(b, v)) return false;
        }
    return true;
}

std::string to_string(const DiffOp& op) {
    if (op.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : op.terms()) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        for (const PrimOp& s : w) {
            os << ' ';
            switch (s.kind) {
                case PrimOp::Kind::MulX: os << 'x' << s.index; break;
                case PrimOp::Kind::MulEta: os << 'e' << s.index; break;
                case PrimOp::Kind::DelX: os << "dx" << s.index; break;
                case PrimOp::Kind::DelEta: os << "de" << s.index; break;
            }
        }
    }
    return os.str();
}

}  // namespace superhowe
