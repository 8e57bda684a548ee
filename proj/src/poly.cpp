#include "orbitlef/poly.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace orbitlef::poly {

VarContext::VarContext(std::vector<std::string> names)
    : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {
    for (std::size_t a = 0; a < names_->size(); ++a)
        for (std::size_t b = a + 1; b < names_->size(); ++b)
            if ((*names_)[a] == (*names_)[b])
                fail(ErrorKind::VariableClash, "duplicate variable name '" + (*names_)[a] + "'");
}

VarContext VarContext::ambient(int n) {
    if (n < 2)
        fail(ErrorKind::InvalidRank, "ambient coordinates need n >= 2");
    if (n == 2)
        return VarContext({"x", "y", "z"});
    std::vector<std::string> names;
    for (int i = 1; i < n; ++i)
        names.push_back("x" + std::to_string(i));
    const int m = n * (n - 1) / 2;
    for (int k = 1; k <= m; ++k)
        names.push_back("y" + std::to_string(k));
    for (int k = 1; k <= m; ++k)
        names.push_back("z" + std::to_string(k));
    return VarContext(std::move(names));
}

std::optional<std::uint32_t> VarContext::index_of(std::string_view name) const {
    for (std::size_t v = 0; v < names_->size(); ++v)
        if ((*names_)[v] == name)
            return static_cast<std::uint32_t>(v);
    return std::nullopt;
}

VarContext VarContext::extended(const std::string& fresh) const {
    if (index_of(fresh))
        fail(ErrorKind::VariableClash, "variable '" + fresh + "' already present");
    std::vector<std::string> names = *names_;
    names.push_back(fresh);
    return VarContext(std::move(names));
}

VarContext VarContext::without_last() const {
    if (names_->empty())
        fail(ErrorKind::InvalidArgument, "empty context");
    std::vector<std::string> names(names_->begin(), names_->end() - 1);
    return VarContext(std::move(names));
}

Monomial Monomial::var(std::uint32_t v, std::uint32_t e) {
    Monomial m;
    if (e > 0)
        m.factors.push_back({v, e});
    return m;
}

std::uint32_t Monomial::degree() const {
    std::uint32_t d = 0;
    for (const auto& [v, e] : factors)
        d += e;
    return d;
}

std::uint32_t Monomial::exponent(std::uint32_t v) const {
    for (const auto& [w, e] : factors)
        if (w == v)
            return e;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.factors.reserve(factors.size() + o.factors.size());
    auto a = factors.begin(), b = o.factors.begin();
    while (a != factors.end() && b != o.factors.end()) {
        if (a->first < b->first)
            r.factors.push_back(*a++);
        else if (b->first < a->first)
            r.factors.push_back(*b++);
        else {
            r.factors.push_back({a->first, a->second + b->second});
            ++a, ++b;
        }
    }
    r.factors.insert(r.factors.end(), a, factors.end());
    r.factors.insert(r.factors.end(), b, o.factors.end());
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    auto a = factors.begin();
    auto b = o.factors.begin();
    while (a != factors.end()) {
        while (b != o.factors.end() && b->first < a->first)
            ++b;
        if (b == o.factors.end() || b->first != a->first || b->second < a->second)
            return false;
        ++a;
    }
    return true;
}

Monomial Monomial::divide_by(const Monomial& o) const {
    if (!o.divides(*this))
        fail(ErrorKind::InvalidArgument, "monomial division not exact");
    Monomial r;
    auto b = o.factors.begin();
    for (const auto& [v, e] : factors) {
        std::uint32_t sub = 0;
        while (b != o.factors.end() && b->first < v)
            ++b;
        if (b != o.factors.end() && b->first == v)
            sub = b->second;
        if (e > sub)
            r.factors.push_back({v, e - sub});
    }
    return r;
}

bool Monomial::coprime(const Monomial& o) const {
    auto a = factors.begin(), b = o.factors.begin();
    while (a != factors.end() && b != o.factors.end()) {
        if (a->first == b->first)
            return false;
        if (a->first < b->first)
            ++a;
        else
            ++b;
    }
    return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    auto i = a.factors.begin(), j = b.factors.begin();
    while (i != a.factors.end() && j != b.factors.end()) {
        if (i->first < j->first)
            r.factors.push_back(*i++);
        else if (j->first < i->first)
            r.factors.push_back(*j++);
        else {
            r.factors.push_back({i->first, std::max(i->second, j->second)});
            ++i, ++j;
        }
    }
    r.factors.insert(r.factors.end(), i, a.factors.end());
    r.factors.insert(r.factors.end(), j, b.factors.end());
    return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r;
    auto i = a.factors.begin(), j = b.factors.begin();
    while (i != a.factors.end() && j != b.factors.end()) {
        if (i->first < j->first)
            ++i;
        else if (j->first < i->first)
            ++j;
        else {
            r.factors.push_back({i->first, std::min(i->second, j->second)});
            ++i, ++j;
        }
    }
    return r;
}

namespace {

// Tie-break of degrevlex: the largest variable with differing exponent
// decides, smaller exponent there wins.
int revlex_tiebreak(const Monomial& a, const Monomial& b) {
    auto i = a.factors.rbegin();
    auto j = b.factors.rbegin();
    while (i != a.factors.rend() && j != b.factors.rend()) {
        if (i->first > j->first)
            return -1; // a has the larger trailing variable -> a smaller
        if (j->first > i->first)
            return +1;
        if (i->second != j->second)
            return i->second > j->second ? -1 : +1;
        ++i, ++j;
    }
    if (i != a.factors.rend())
        return -1;
    if (j != b.factors.rend())
        return +1;
    return 0;
}

int lex_cmp(const Monomial& a, const Monomial& b) {
    auto i = a.factors.begin();
    auto j = b.factors.begin();
    while (i != a.factors.end() && j != b.factors.end()) {
        if (i->first < j->first)
            return +1; // a has positive exponent at a more significant variable
        if (j->first < i->first)
            return -1;
        if (i->second != j->second)
            return i->second > j->second ? +1 : -1;
        ++i, ++j;
    }
    if (i != a.factors.end())
        return +1;
    if (j != b.factors.end())
        return -1;
    return 0;
}

// Dense-exponent comparison for a custom priority permutation.
int cmp_with_priority(OrderKind kind, const std::vector<std::uint32_t>& prio,
                      const Monomial& a, const Monomial& b) {
    const std::uint32_t da = a.degree(), db = b.degree();
    if (kind != OrderKind::Lex && da != db)
        return da > db ? +1 : -1;
    if (kind == OrderKind::Degrevlex) {
        for (auto it = prio.rbegin(); it != prio.rend(); ++it) {
            const std::uint32_t ea = a.exponent(*it), eb = b.exponent(*it);
            if (ea != eb)
                return ea > eb ? -1 : +1;
        }
        return 0;
    }
    for (std::uint32_t v : prio) {
        const std::uint32_t ea = a.exponent(v), eb = b.exponent(v);
        if (ea != eb)
            return ea > eb ? +1 : -1;
    }
    return 0;
}

} // namespace

int TermOrder::cmp(const Monomial& a, const Monomial& b) const {
    if (!priority.empty())
        return cmp_with_priority(kind, priority, a, b);
    switch (kind) {
    case OrderKind::Lex:
        return lex_cmp(a, b);
    case OrderKind::Deglex: {
        const std::uint32_t da = a.degree(), db = b.degree();
        if (da != db)
            return da > db ? +1 : -1;
        return lex_cmp(a, b);
    }
    case OrderKind::Degrevlex:
    default: {
        const std::uint32_t da = a.degree(), db = b.degree();
        if (da != db)
            return da > db ? +1 : -1;
        return revlex_tiebreak(a, b);
    }
    }
}

std::string TermOrder::str() const {
    switch (kind) {
    case OrderKind::Lex:
        return "lex";
    case OrderKind::Deglex:
        return "deglex";
    default:
        return "degrevlex";
    }
}

TermOrder TermOrder::parse(std::string_view name) {
    if (name == "degrevlex")
        return TermOrder{OrderKind::Degrevlex, {}};
    if (name == "lex")
        return TermOrder{OrderKind::Lex, {}};
    if (name == "deglex")
        return TermOrder{OrderKind::Deglex, {}};
    fail(ErrorKind::InvalidArgument, "unknown term order '" + std::string(name) + "'");
}

Polynomial Polynomial::constant(const VarContext& ctx, const Rat& c) {
    Polynomial p(ctx);
    if (c != 0)
        p.terms_.push_back({Monomial::one(), c});
    return p;
}

Polynomial Polynomial::variable(const VarContext& ctx, std::uint32_t v) {
    if (v >= ctx.size())
        fail(ErrorKind::InvalidArgument, "variable index out of range");
    Polynomial p(ctx);
    p.terms_.push_back({Monomial::var(v), Rat(1)});
    return p;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& t : terms_)
        d = std::max(d, static_cast<int>(t.mono.degree()));
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty())
        return true;
    const std::uint32_t d = terms_.front().mono.degree();
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const Term& t) { return t.mono.degree() == d; });
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

Polynomial Polynomial::operator-() const {
    Polynomial r(ctx_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        r.terms_.push_back({t.mono, -t.coeff});
    return r;
}

namespace {

void check_ctx(const VarContext& a, const VarContext& b) {
    if (!a.same(b))
        fail(ErrorKind::ContextMismatch, "polynomials from different variable contexts");
}

// Merge of two canonically sorted term lists; rhs scaled by c.
std::vector<Term> merge_scaled(const std::vector<Term>& a, const std::vector<Term>& b,
                               const Rat& c) {
    const TermOrder ord = canonical_order();
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        const int s = ord.cmp(i->mono, j->mono);
        if (s > 0) {
            out.push_back(*i++);
        } else if (s < 0) {
            out.push_back({j->mono, c * j->coeff});
            ++j;
        } else {
            Rat v = i->coeff + c * j->coeff;
            if (v != 0)
                out.push_back({i->mono, std::move(v)});
            ++i, ++j;
        }
    }
    for (; i != a.end(); ++i)
        out.push_back(*i);
    for (; j != b.end(); ++j)
        out.push_back({j->mono, c * j->coeff});
    return out;
}

} // namespace

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_ctx(ctx_, o.ctx_);
    Polynomial r(ctx_);
    r.terms_ = merge_scaled(terms_, o.terms_, Rat(1));
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    check_ctx(ctx_, o.ctx_);
    Polynomial r(ctx_);
    r.terms_ = merge_scaled(terms_, o.terms_, Rat(-1));
    return r;
}

Polynomial Polynomial::operator*(const Rat& c) const {
    Polynomial r(ctx_);
    if (c == 0)
        return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        r.terms_.push_back({t.mono, t.coeff * c});
    return r;
}

Polynomial Polynomial::times_term(const Rat& c, const Monomial& m) const {
    Polynomial r(ctx_);
    if (c == 0)
        return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
        r.terms_.push_back({t.mono * m, t.coeff * c});
    // Multiplying by a fixed monomial preserves the canonical ordering.
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_ctx(ctx_, o.ctx_);
    struct Desc {
        TermOrder ord;
        bool operator()(const Monomial& a, const Monomial& b) const {
            return ord.cmp(a, b) > 0;
        }
    };
    std::map<Monomial, Rat, Desc> acc{Desc{canonical_order()}};
    for (const auto& s : terms_)
        for (const auto& t : o.terms_) {
            Monomial m = s.mono * t.mono;
            auto [it, fresh] = acc.try_emplace(std::move(m), Rat(0));
            it->second += s.coeff * t.coeff;
        }
    Polynomial r(ctx_);
    for (auto& [m, c] : acc)
        if (c != 0)
            r.terms_.push_back({m, std::move(c)});
    return r;
}

Polynomial Polynomial::derivative(std::uint32_t v) const {
    Polynomial r(ctx_);
    std::vector<Term> raw;
    for (const auto& t : terms_) {
        const std::uint32_t e = t.mono.exponent(v);
        if (e == 0)
            continue;
        raw.push_back({t.mono.divide_by(Monomial::var(v)), t.coeff * e});
    }
    return from_terms(ctx_, std::move(raw));
}

Rat Polynomial::eval(const std::vector<Rat>& point) const {
    if (point.size() != ctx_.size())
        fail(ErrorKind::SizeMismatch, "evaluation point has wrong arity");
    Rat total(0);
    for (const auto& t : terms_) {
        Rat v = t.coeff;
        for (const auto& [var, e] : t.mono.factors) {
            Rat p(1);
            for (std::uint32_t k = 0; k < e; ++k)
                p *= point[var];
            v *= p;
        }
        total += v;
    }
    return total;
}

Polynomial Polynomial::from_terms(const VarContext& ctx, std::vector<Term> terms) {
    const TermOrder ord = canonical_order();
    std::sort(terms.begin(), terms.end(),
              [&](const Term& a, const Term& b) { return ord.cmp(a.mono, b.mono) > 0; });
    Polynomial r(ctx);
    for (auto& t : terms) {
        for (const auto& [v, e] : t.mono.factors)
            if (v >= ctx.size())
                fail(ErrorKind::InvalidArgument, "monomial variable outside context");
        if (!r.terms_.empty() && r.terms_.back().mono == t.mono)
            r.terms_.back().coeff += t.coeff;
        else
            r.terms_.push_back(std::move(t));
    }
    std::erase_if(r.terms_, [](const Term& t) { return t.coeff == 0; });
    return r;
}

bool Polynomial::same_terms(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size())
        return false;
    for (std::size_t k = 0; k < terms_.size(); ++k)
        if (terms_[k].mono != o.terms_[k].mono || terms_[k].coeff != o.terms_[k].coeff)
            return false;
    return true;
}

std::string Polynomial::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rat c = t.coeff;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0)
                c = -c;
        }
        first = false;
        const bool unit = (c == 1);
        if (!unit || t.mono.is_one())
            os << rat_str(c);
        bool star = !unit || t.mono.is_one();
        for (const auto& [v, e] : t.mono.factors) {
            if (star)
                os << "*";
            os << ctx_.name(v);
            if (e > 1)
                os << "^" << e;
            star = true;
        }
    }
    return os.str();
}

std::vector<Term> sorted_terms(const Polynomial& f, const TermOrder& ord) {
    std::vector<Term> out = f.terms();
    if (!(ord == canonical_order()))
        std::sort(out.begin(), out.end(),
                  [&](const Term& a, const Term& b) { return ord.cmp(a.mono, b.mono) > 0; });
    return out;
}

namespace {

struct Lexer {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string number() {
        skip_ws();
        std::string out;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            out += s[pos++];
        return out;
    }
    std::string ident() {
        skip_ws();
        std::string out;
        if (pos < s.size() &&
            (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            out += s[pos++];
        else
            return out;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            out += s[pos++];
        return out;
    }
};

} // namespace

Polynomial parse_polynomial(const VarContext& ctx, std::string_view text) {
    Lexer lx{text};
    std::vector<Term> terms;
    bool first = true;
    while (!lx.done()) {
        int sign = 1;
        if (lx.accept('-'))
            sign = -1;
        else if (lx.accept('+'))
            sign = 1;
        else if (!first)
            fail(ErrorKind::ParseError, "expected '+' or '-' in polynomial: '" + std::string(text) + "'");
        first = false;

        Rat coeff(sign);
        Monomial mono;
        bool any_factor = false;
        for (;;) {
            char c = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string num = lx.number();
                if (num.empty())
                    fail(ErrorKind::ParseError, "bad number in polynomial");
                Rat val{mpz_class(num)};
                if (lx.accept('/')) {
                    std::string den = lx.number();
                    if (den.empty() || mpz_class(den) == 0)
                        fail(ErrorKind::ParseError, "bad denominator in polynomial");
                    val = Rat(mpz_class(num), mpz_class(den));
                    val.canonicalize();
                }
                coeff *= val;
                any_factor = true;
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string name = lx.ident();
                auto v = ctx.index_of(name);
                if (!v)
                    fail(ErrorKind::ParseError, "unknown variable '" + name + "'");
                std::uint32_t e = 1;
                if (lx.accept('^')) {
                    std::string ex = lx.number();
                    if (ex.empty())
                        fail(ErrorKind::ParseError, "bad exponent in polynomial");
                    e = static_cast<std::uint32_t>(std::stoul(ex));
                }
                mono = mono * Monomial::var(*v, e);
                any_factor = true;
            } else {
                fail(ErrorKind::ParseError, "expected coefficient or variable in polynomial: '" +
                                                std::string(text) + "'");
            }
            if (!lx.accept('*'))
                break;
        }
        if (!any_factor)
            fail(ErrorKind::ParseError, "empty term in polynomial");
        terms.push_back({std::move(mono), std::move(coeff)});
    }
    if (terms.empty())
        fail(ErrorKind::ParseError, "empty polynomial text");
    return Polynomial::from_terms(ctx, std::move(terms));
}

} // namespace orbitlef::poly
