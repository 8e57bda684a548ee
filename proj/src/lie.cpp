#include "orbitlef/lie.h"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace orbitlef::lie {

std::string Root::str() const {
    std::ostringstream os;
    os << "e" << i << "-e" << j;
    return os.str();
}

CartanElement::CartanElement(std::vector<Rat> diag) : diag_(std::move(diag)) {
    if (diag_.empty())
        fail(ErrorKind::InvalidArgument, "empty diagonal");
    Rat sum(0);
    for (const auto& d : diag_)
        sum += d;
    if (sum != 0)
        fail(ErrorKind::InvalidArgument, "Cartan element must be traceless");
}

bool CartanElement::is_zero() const {
    return std::all_of(diag_.begin(), diag_.end(), [](const Rat& d) { return d == 0; });
}

bool CartanElement::is_dominant() const {
    for (std::size_t k = 0; k + 1 < diag_.size(); ++k)
        if (diag_[k] < diag_[k + 1])
            return false;
    return true;
}

QMatrix CartanElement::matrix() const {
    return QMatrix::diagonal(diag_);
}

std::string CartanElement::str() const {
    std::ostringstream os;
    os << "diag(";
    for (std::size_t k = 0; k < diag_.size(); ++k) {
        if (k)
            os << ",";
        os << rat_str(diag_[k]);
    }
    os << ")";
    return os.str();
}

WeylElement::WeylElement(std::vector<int> one_line) : perm_(std::move(one_line)) {
    std::vector<bool> seen(perm_.size(), false);
    for (int v : perm_) {
        if (v < 1 || v > static_cast<int>(perm_.size()) || seen[static_cast<std::size_t>(v - 1)])
            fail(ErrorKind::InvalidArgument, "not a permutation");
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

WeylElement WeylElement::identity(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    return WeylElement(std::move(p));
}

CartanElement WeylElement::act(const CartanElement& h) const {
    if (h.n() != n())
        fail(ErrorKind::SizeMismatch, "Weyl element and Cartan element sizes differ");
    std::vector<Rat> out(static_cast<std::size_t>(n()));
    for (int i = 1; i <= n(); ++i)
        out[static_cast<std::size_t>(apply(i) - 1)] = h.entry(i);
    return CartanElement(std::move(out));
}

int WeylElement::length() const {
    int inv = 0;
    for (std::size_t a = 0; a < perm_.size(); ++a)
        for (std::size_t b = a + 1; b < perm_.size(); ++b)
            if (perm_[a] > perm_[b])
                ++inv;
    return inv;
}

std::string ThetaSet::str() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (int k : indices) {
        if (!first)
            os << ",";
        os << "a" << k;
        first = false;
    }
    os << "}";
    return os.str();
}

RootSystemA::RootSystemA(int n) : n_(n) {
    if (n < 2)
        fail(ErrorKind::InvalidRank, "type A needs n >= 2");
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j)
                roots_.push_back(Root{i, j});
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            positive_.push_back(Root{i, j});
    for (int k = 1; k < n; ++k)
        simple_.push_back(Root{k, k + 1});
}

QMatrix RootSystemA::root_vector(const Root& a) const {
    if (a.i < 1 || a.i > n_ || a.j < 1 || a.j > n_ || a.i == a.j)
        fail(ErrorKind::InvalidArgument, "root outside system");
    return QMatrix::unit(static_cast<std::size_t>(n_),
                         static_cast<std::size_t>(a.i - 1),
                         static_cast<std::size_t>(a.j - 1));
}

RootSystemA root_system(int n) {
    return RootSystemA(n);
}

bool is_regular(const CartanElement& h, const RootSystemA& rs) {
    if (h.n() != rs.n())
        fail(ErrorKind::SizeMismatch, "Cartan element size does not match root system");
    for (const Root& a : rs.positive_roots())
        if (h.root_value(a) == 0)
            return false;
    return true;
}

CartanElement dominant_sort(const CartanElement& h) {
    std::vector<Rat> d = h.diag();
    std::sort(d.begin(), d.end(), [](const Rat& a, const Rat& b) { return a > b; });
    return CartanElement(std::move(d));
}

ThetaSet theta_of(const CartanElement& h0, const RootSystemA& rs) {
    if (h0.n() != rs.n())
        fail(ErrorKind::SizeMismatch, "Cartan element size does not match root system");
    if (!h0.is_dominant())
        fail(ErrorKind::NotDominant, "theta_of needs weakly decreasing entries; sort first");
    ThetaSet theta;
    for (int k = 1; k < rs.n(); ++k)
        if (h0.root_value(rs.simple_roots()[static_cast<std::size_t>(k - 1)]) == 0)
            theta.indices.insert(k);
    return theta;
}

std::vector<CartanElement> weyl_orbit(const CartanElement& h0) {
    std::vector<Rat> d = h0.diag();
    std::sort(d.begin(), d.end());
    std::vector<CartanElement> orbit;
    do {
        orbit.emplace_back(d);
    } while (std::next_permutation(d.begin(), d.end()));
    return orbit;
}

std::vector<WeylElement> weyl_group(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 1);
    std::vector<WeylElement> out;
    do {
        out.emplace_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

int orbit_dim_c(const CartanElement& h0, const RootSystemA& rs) {
    if (h0.n() != rs.n())
        fail(ErrorKind::SizeMismatch, "Cartan element size does not match root system");
    int count = 0;
    for (const Root& a : rs.roots())
        if (h0.root_value(a) != 0)
            ++count;
    return count;
}

namespace {

// Block structure of W_Theta: consecutive positions merged along Theta.
std::vector<int> theta_blocks(const ThetaSet& theta, int n) {
    std::vector<int> blocks;
    int len = 1;
    for (int k = 1; k < n; ++k) {
        if (theta.indices.count(k)) {
            ++len;
        } else {
            blocks.push_back(len);
            len = 1;
        }
    }
    blocks.push_back(len);
    return blocks;
}

} // namespace

int flag_dim_c(const ThetaSet& theta, const RootSystemA& rs) {
    for (int k : theta.indices)
        if (k < 1 || k >= rs.n())
            fail(ErrorKind::InvalidArgument, "theta index outside {1..n-1}");
    int dim = static_cast<int>(rs.positive_roots().size());
    for (int b : theta_blocks(theta, rs.n()))
        dim -= b * (b - 1) / 2;
    return dim;
}

BettiVector flag_poincare(const ThetaSet& theta, const RootSystemA& rs) {
    const int n = rs.n();
    for (int k : theta.indices)
        if (k < 1 || k >= n)
            fail(ErrorKind::InvalidArgument, "theta index outside {1..n-1}");
    const int dim = flag_dim_c(theta, rs);
    BettiVector betti(static_cast<std::size_t>(2 * dim + 1), 0);
    // Minimal coset representatives: no descent at positions in Theta.
    for (const WeylElement& w : weyl_group(n)) {
        bool minimal = true;
        for (int k : theta.indices)
            if (w.apply(k) > w.apply(k + 1)) {
                minimal = false;
                break;
            }
        if (minimal)
            ++betti[static_cast<std::size_t>(2 * w.length())];
    }
    return betti;
}

WeylElement longest_element(const RootSystemA& rs) {
    std::vector<int> p(static_cast<std::size_t>(rs.n()));
    for (int i = 1; i <= rs.n(); ++i)
        p[static_cast<std::size_t>(i - 1)] = rs.n() + 1 - i;
    return WeylElement(std::move(p));
}

ThetaSet dual_theta(const ThetaSet& theta, const RootSystemA& rs) {
    ThetaSet dual;
    for (int k : theta.indices) {
        if (k < 1 || k >= rs.n())
            fail(ErrorKind::InvalidArgument, "theta index outside {1..n-1}");
        dual.indices.insert(rs.n() - k);
    }
    return dual;
}

} // namespace orbitlef::lie
