#include "splintkit/rootsys.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

namespace splintkit {

const char* to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

// ---------------------------------------------------------------- Weight

bool Weight::is_zero() const
{
    auto zero = [](const Rational& r) { return r == 0; };
    return std::all_of(eps.begin(), eps.end(), zero) && std::all_of(delta.begin(), delta.end(), zero);
}

Weight& Weight::operator+=(const Weight& o)
{
    if (o.eps.size() != eps.size() || o.delta.size() != delta.size())
        throw std::invalid_argument("weight dimension mismatch");
    for (std::size_t i = 0; i < eps.size(); ++i)
        eps[i] += o.eps[i];
    for (std::size_t i = 0; i < delta.size(); ++i)
        delta[i] += o.delta[i];
    return *this;
}

Weight& Weight::operator-=(const Weight& o) { return *this += -o; }

Weight Weight::operator-() const
{
    Weight w = *this;
    for (auto& c : w.eps)
        c = -c;
    for (auto& c : w.delta)
        c = -c;
    return w;
}

Weight operator*(const Rational& s, Weight w)
{
    for (auto& c : w.eps)
        c *= s;
    for (auto& c : w.delta)
        c *= s;
    return w;
}

bool operator<(const Weight& a, const Weight& b)
{
    if (a.eps != b.eps)
        return std::lexicographical_compare(a.eps.begin(), a.eps.end(), b.eps.begin(), b.eps.end());
    return std::lexicographical_compare(a.delta.begin(), a.delta.end(), b.delta.begin(), b.delta.end());
}

namespace {

void append_term(std::string& out, const Rational& c, const std::string& sym)
{
    if (c == 0)
        return;
    if (c > 0 && !out.empty())
        out += '+';
    if (c == -1)
        out += '-';
    else if (c != 1)
        out += to_string(c);
    out += sym;
}

std::string format_weight(const Weight& w, bool bare_eps, bool bare_delta)
{
    auto sym = [](char base, std::size_t i, bool bare) {
        return bare ? std::string(1, base) : std::string(1, base) + std::to_string(i + 1);
    };
    // F(4)-style roots: every nonzero coefficient is +-1/2
    bool all_half = true;
    bool any = false;
    for (std::size_t i = 0; i < w.dim(); ++i) {
        if (w[i] == 0)
            continue;
        any = true;
        if (w[i] != Rational(1, 2) && w[i] != Rational(-1, 2))
            all_half = false;
    }
    if (any && all_half) {
        std::string inner;
        for (std::size_t i = 0; i < w.eps.size(); ++i)
            append_term(inner, 2 * w.eps[i], sym('e', i, bare_eps));
        for (std::size_t i = 0; i < w.delta.size(); ++i)
            append_term(inner, 2 * w.delta[i], sym('d', i, bare_delta));
        return "1/2(" + inner + ")";
    }
    std::string out;
    for (std::size_t i = 0; i < w.delta.size(); ++i)
        append_term(out, w.delta[i], sym('d', i, bare_delta));
    for (std::size_t i = 0; i < w.eps.size(); ++i)
        append_term(out, w.eps[i], sym('e', i, bare_eps));
    return out.empty() ? "0" : out;
}

} // namespace

std::string to_string(const Weight& w) { return format_weight(w, false, false); }

bool root_less(const Root& a, const Root& b)
{
    if (a.parity != b.parity)
        return a.parity == Parity::even;
    return a.weight < b.weight;
}

// ---------------------------------------------------------------- BilinearForm

void BilinearForm::set(std::size_t i, std::size_t j, FormValue v)
{
    gram_[i * dim_ + j] = v;
    gram_[j * dim_ + i] = v;
}

FormValue BilinearForm::pair(const Weight& a, const Weight& b) const
{
    if (a.dim() != dim_ || b.dim() != dim_)
        throw std::invalid_argument("pairing: weight dimension does not match the form");
    FormValue out;
    for (std::size_t i = 0; i < dim_; ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < dim_; ++j)
            if (b[j] != 0)
                out += (a[i] * b[j]) * at(i, j);
    }
    return out;
}

// ---------------------------------------------------------------- families

const char* family_token(Family f)
{
    switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::G3: return "G3";
    case Family::F4: return "F4";
    case Family::D21a: return "D21a";
    case Family::An: return "An";
    case Family::Bn: return "Bn";
    case Family::Cn: return "Cn";
    case Family::Dn: return "Dn";
    case Family::G2: return "G2";
    }
    return "?";
}

std::optional<Family> family_from_token(const std::string& token)
{
    for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::G3, Family::F4, Family::D21a,
                     Family::An, Family::Bn, Family::Cn, Family::Dn, Family::G2})
        if (token == family_token(f))
            return f;
    return std::nullopt;
}

bool is_even_family(Family f)
{
    return f == Family::An || f == Family::Bn || f == Family::Cn || f == Family::Dn || f == Family::G2;
}

std::string system_name(Family f, int p, int q)
{
    auto pair = [&](char c) { return std::string(1, c) + "(" + std::to_string(p) + "," + std::to_string(q) + ")"; };
    switch (f) {
    case Family::A: return pair('A');
    case Family::B: return pair('B');
    case Family::C: return "C(" + std::to_string(p) + ")";
    case Family::D: return pair('D');
    case Family::G3: return "G(3)";
    case Family::F4: return "F(4)";
    case Family::D21a: return "D(2,1;a)";
    case Family::An: return "A_" + std::to_string(p);
    case Family::Bn: return "B_" + std::to_string(p);
    case Family::Cn: return "C_" + std::to_string(p);
    case Family::Dn: return "D_" + std::to_string(p);
    case Family::G2: return "G_2";
    }
    return "?";
}

// ---------------------------------------------------------------- RootSystem

RootSystem::RootSystem(Data data) : d_(std::move(data))
{
    name_ = system_name(d_.family, d_.p, d_.q);
    if (d_.roots.size() > kMaxRoots)
        throw CapacityError(name_ + ": more than " + std::to_string(kMaxRoots) + " positive roots");
    std::sort(d_.roots.begin(), d_.roots.end(), root_less);
    for (std::size_t i = 0; i < d_.roots.size(); ++i) {
        const auto& w = d_.roots[i].weight;
        if (w.eps.size() != d_.eps_dim || w.delta.size() != d_.delta_dim)
            throw std::invalid_argument(name_ + ": root has wrong dimension");
        if (w.is_zero())
            throw std::invalid_argument(name_ + ": zero root");
        if (!index_.emplace(weight_key(w), i).second)
            throw std::invalid_argument(name_ + ": duplicate positive root " + to_string(w));
    }
    const std::size_t n = d_.roots.size();
    sums_.assign(n * n, -1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            if (auto k = index_of(d_.roots[i].weight + d_.roots[j].weight))
                sums_[i * n + j] = sums_[j * n + i] = static_cast<int>(*k);
}

std::string RootSystem::weight_key(const Weight& w) const
{
    std::string key;
    for (std::size_t i = 0; i < w.dim(); ++i) {
        key += to_string(w[i]);
        key += ',';
    }
    return key;
}

std::optional<std::size_t> RootSystem::index_of(const Weight& w) const
{
    if (w.eps.size() != d_.eps_dim || w.delta.size() != d_.delta_dim)
        return std::nullopt;
    auto it = index_.find(weight_key(w));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

RootMask RootSystem::all_roots() const
{
    RootMask m;
    for (std::size_t i = 0; i < size(); ++i)
        m.set(i);
    return m;
}

RootMask RootSystem::roots_of_parity(Parity p) const
{
    RootMask m;
    for (std::size_t i = 0; i < size(); ++i)
        if (d_.roots[i].parity == p)
            m.set(i);
    return m;
}

std::size_t RootSystem::count(Parity p) const { return roots_of_parity(p).count(); }

Weight RootSystem::from_simple_coordinates(const std::vector<Rational>& coeffs) const
{
    if (coeffs.size() != d_.simple_roots.size())
        throw std::invalid_argument(name_ + ": simple-root coordinate count mismatch");
    Weight w(d_.eps_dim, d_.delta_dim);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        w += coeffs[i] * d_.simple_roots[i];
    return w;
}

bool operator==(const RootSystem& a, const RootSystem& b)
{
    return a.d_.family == b.d_.family && a.d_.p == b.d_.p && a.d_.q == b.d_.q && a.d_.roots == b.d_.roots &&
           a.d_.form == b.d_.form && a.d_.rank == b.d_.rank && a.d_.eps_dim == b.d_.eps_dim &&
           a.d_.delta_dim == b.d_.delta_dim;
}

// ---------------------------------------------------------------- construction

namespace {

struct Builder {
    RootSystem::Data d;

    Builder(Family f, int p, int q, std::size_t m, std::size_t n, int rank)
    {
        d.family = f;
        d.p = p;
        d.q = q;
        d.eps_dim = m;
        d.delta_dim = n;
        d.rank = rank;
        d.form = BilinearForm(m + n);
    }

    Weight zero() const { return Weight(d.eps_dim, d.delta_dim); }
    Weight e(std::size_t i, Rational c = 1) const
    {
        Weight w = zero();
        w.eps[i] = c;
        return w;
    }
    Weight dl(std::size_t k, Rational c = 1) const
    {
        Weight w = zero();
        w.delta[k] = c;
        return w;
    }
    void add(Weight w, Parity p) { d.roots.push_back({std::move(w), p}); }

    void eps_diagonal(FormValue v)
    {
        for (std::size_t i = 0; i < d.eps_dim; ++i)
            d.form.set(i, i, v);
    }
    void delta_diagonal(FormValue v)
    {
        for (std::size_t k = 0; k < d.delta_dim; ++k)
            d.form.set(d.eps_dim + k, d.eps_dim + k, v);
    }

    // e_i - e_j, e_i + e_j for i < j over the eps block
    void eps_pairs(bool plus, Parity p)
    {
        for (std::size_t i = 0; i < d.eps_dim; ++i)
            for (std::size_t j = i + 1; j < d.eps_dim; ++j) {
                add(e(i) - e(j), p);
                if (plus)
                    add(e(i) + e(j), p);
            }
    }
    void delta_pairs(bool plus, Parity p)
    {
        for (std::size_t k = 0; k < d.delta_dim; ++k)
            for (std::size_t l = k + 1; l < d.delta_dim; ++l) {
                add(dl(k) - dl(l), p);
                if (plus)
                    add(dl(k) + dl(l), p);
            }
    }

    RootSystem finish() { return RootSystem(std::move(d)); }
};

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw ParameterError(what);
}

/// Coordinates of w over a basis (rows), by Gauss-Jordan elimination.
std::vector<Rational> solve_coordinates(const std::vector<Weight>& basis, const Weight& w)
{
    const std::size_t n = basis.size();
    const std::size_t dim = w.dim();
    // augmented dim x (n+1) matrix, columns = basis vectors
    std::vector<std::vector<Rational>> a(dim, std::vector<Rational>(n + 1));
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            a[r][c] = basis[c][r];
        a[r][n] = w[r];
    }
    std::size_t row = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t c = 0; c < n && row < dim; ++c) {
        std::size_t piv = row;
        while (piv < dim && a[piv][c] == 0)
            ++piv;
        if (piv == dim)
            continue;
        std::swap(a[piv], a[row]);
        Rational inv = 1 / a[row][c];
        for (auto& x : a[row])
            x *= inv;
        for (std::size_t r = 0; r < dim; ++r)
            if (r != row && a[r][c] != 0) {
                Rational f = a[r][c];
                for (std::size_t cc = 0; cc <= n; ++cc)
                    a[r][cc] -= f * a[row][cc];
            }
        pivot_col.push_back(c);
        ++row;
    }
    if (pivot_col.size() != n)
        throw std::logic_error("simple roots are linearly dependent");
    for (std::size_t r = row; r < dim; ++r)
        if (a[r][n] != 0)
            throw std::logic_error("weight outside the span of the simple roots");
    std::vector<Rational> x(n);
    for (std::size_t r = 0; r < n; ++r)
        x[pivot_col[r]] = a[r][n];
    return x;
}

/// Keep the roots with nonnegative integer coordinates over the simple roots.
void select_positive(Builder& b, const std::vector<Root>& all)
{
    for (const auto& r : all) {
        auto x = solve_coordinates(b.d.simple_roots, r.weight);
        bool positive = std::all_of(x.begin(), x.end(), [](const Rational& c) { return c >= 0 && is_integer(c); });
        if (positive)
            b.add(r.weight, r.parity);
    }
}

RootSystem build_g3()
{
    Builder b(Family::G3, 0, 0, 2, 1, 3);
    auto eps = [&](int i) {
        if (i < 2)
            return b.e(i);
        return -(b.e(0) + b.e(1));
    };
    const Weight delta = b.dl(0);
    std::vector<Root> all;
    auto both = [&](const Weight& w, Parity p) {
        all.push_back({w, p});
        all.push_back({-w, p});
    };
    for (int i = 0; i < 3; ++i) {
        both(eps(i), Parity::even);
        for (int j = i + 1; j < 3; ++j)
            both(eps(i) - eps(j), Parity::even);
        both(eps(i) + delta, Parity::odd);
        both(eps(i) - delta, Parity::odd);
    }
    both(Rational(2) * delta, Parity::even);
    both(delta, Parity::odd);
    b.d.simple_roots = {delta + eps(2), eps(0), eps(1) - eps(0)};
    select_positive(b, all);
    b.d.form.set(0, 0, {-2, 0});
    b.d.form.set(1, 1, {-2, 0});
    b.d.form.set(0, 1, {1, 0});
    b.d.form.set(2, 2, {2, 0});
    return b.finish();
}

RootSystem build_f4()
{
    Builder b(Family::F4, 0, 0, 3, 1, 4);
    const Weight delta = b.dl(0);
    std::vector<Root> all;
    auto both = [&](const Weight& w, Parity p) {
        all.push_back({w, p});
        all.push_back({-w, p});
    };
    for (int i = 0; i < 3; ++i) {
        both(b.e(i), Parity::even);
        for (int j = i + 1; j < 3; ++j) {
            both(b.e(i) - b.e(j), Parity::even);
            both(b.e(i) + b.e(j), Parity::even);
        }
    }
    both(delta, Parity::even);
    const Rational half(1, 2);
    for (int s = 0; s < 8; ++s) {
        Weight w = half * b.e(0);
        w += Rational(s & 1 ? -1 : 1, 2) * b.e(1);
        w += Rational(s & 2 ? -1 : 1, 2) * b.e(2);
        w += Rational(s & 4 ? -1 : 1, 2) * delta;
        both(w, Parity::odd);
    }
    b.d.simple_roots = {half * (delta - b.e(0) - b.e(1) - b.e(2)), b.e(2), b.e(1) - b.e(2), b.e(0) - b.e(1)};
    select_positive(b, all);
    b.eps_diagonal({-2, 0});
    b.delta_diagonal({6, 0});
    return b.finish();
}

RootSystem build_d21a()
{
    Builder b(Family::D21a, 0, 0, 3, 0, 3);
    std::vector<Root> all;
    auto both = [&](const Weight& w, Parity p) {
        all.push_back({w, p});
        all.push_back({-w, p});
    };
    for (int i = 0; i < 3; ++i)
        both(b.e(i, 2), Parity::even);
    for (int s = 0; s < 4; ++s) {
        Weight w = b.e(0) + b.e(1, s & 1 ? -1 : 1) + b.e(2, s & 2 ? -1 : 1);
        both(w, Parity::odd);
    }
    b.d.simple_roots = {b.e(0) - b.e(1) - b.e(2), b.e(1, 2), b.e(2, 2)};
    select_positive(b, all);
    const Rational mhalf(-1, 2);
    b.d.form.set(0, 0, {mhalf, mhalf});
    b.d.form.set(1, 1, {mhalf, 0});
    b.d.form.set(2, 2, {0, mhalf});
    return b.finish();
}

RootSystem build_g2()
{
    Builder b(Family::G2, 2, 0, 2, 0, 2);
    Weight e1 = b.e(0), e2 = b.e(1), e3 = -(e1 + e2);
    for (const Weight& w : {e1, e2, Weight(-e3), Weight(e2 - e1), Weight(e1 - e3), Weight(e2 - e3)})
        b.add(w, Parity::even);
    b.d.form.set(0, 0, {2, 0});
    b.d.form.set(1, 1, {2, 0});
    b.d.form.set(0, 1, {-1, 0});
    return b.finish();
}

} // namespace

RootSystem build(Family family, int p, int q, bool flip_delta_sign)
{
    const FormValue one{1, 0}, minus_one{-1, 0};
    switch (family) {
    case Family::A: {
        require(p >= 0 && q >= 0, "A(m,n) requires m >= 0 and n >= 0");
        const std::size_t m = p + 1, n = q + 1;
        Builder b(family, p, q, m, n, static_cast<int>(m + n - 1));
        b.eps_pairs(false, Parity::even);
        b.delta_pairs(false, Parity::even);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < m; ++i)
                b.add(b.dl(k) - b.e(i), Parity::odd);
        b.eps_diagonal(one);
        b.delta_diagonal(flip_delta_sign ? minus_one : one);
        b.d.delta_sign_flipped = flip_delta_sign;
        return b.finish();
    }
    case Family::B: {
        require(p >= 0 && q >= 1, "B(m,n) requires m >= 0 and n >= 1");
        const std::size_t m = p, n = q;
        Builder b(family, p, q, m, n, p + q);
        b.eps_pairs(true, Parity::even);
        for (std::size_t i = 0; i < m; ++i)
            b.add(b.e(i), Parity::even);
        b.delta_pairs(true, Parity::even);
        for (std::size_t k = 0; k < n; ++k) {
            b.add(b.dl(k, 2), Parity::even);
            b.add(b.dl(k), Parity::odd);
            for (std::size_t i = 0; i < m; ++i) {
                b.add(b.dl(k) + b.e(i), Parity::odd);
                b.add(b.dl(k) - b.e(i), Parity::odd);
            }
        }
        b.eps_diagonal(minus_one);
        b.delta_diagonal(one);
        return b.finish();
    }
    case Family::C: {
        require(p >= 2, "C(n+1) requires n >= 1");
        const std::size_t n = p - 1;
        Builder b(family, p, 0, 1, n, p);
        b.delta_pairs(true, Parity::even);
        for (std::size_t k = 0; k < n; ++k) {
            b.add(b.dl(k, 2), Parity::even);
            b.add(b.e(0) + b.dl(k), Parity::odd);
            b.add(b.e(0) - b.dl(k), Parity::odd);
        }
        b.eps_diagonal(one);
        b.delta_diagonal(minus_one);
        return b.finish();
    }
    case Family::D: {
        require(p >= 1 && q >= 1, "D(m,n) requires m >= 1 and n >= 1");
        const std::size_t m = p, n = q;
        Builder b(family, p, q, m, n, p + q);
        b.eps_pairs(true, Parity::even);
        b.delta_pairs(true, Parity::even);
        for (std::size_t k = 0; k < n; ++k) {
            b.add(b.dl(k, 2), Parity::even);
            for (std::size_t i = 0; i < m; ++i) {
                b.add(b.dl(k) + b.e(i), Parity::odd);
                b.add(b.dl(k) - b.e(i), Parity::odd);
            }
        }
        b.eps_diagonal(minus_one);
        b.delta_diagonal(one);
        return b.finish();
    }
    case Family::G3: return build_g3();
    case Family::F4: return build_f4();
    case Family::D21a: return build_d21a();
    case Family::An: {
        require(p >= 1, "A_n requires n >= 1");
        Builder b(family, p, 0, p + 1, 0, p);
        b.eps_pairs(false, Parity::even);
        b.eps_diagonal(one);
        return b.finish();
    }
    case Family::Bn:
    case Family::Cn: {
        require(p >= 1, std::string(family == Family::Bn ? "B_n" : "C_n") + " requires n >= 1");
        Builder b(family, p, 0, p, 0, p);
        b.eps_pairs(true, Parity::even);
        for (int i = 0; i < p; ++i)
            b.add(b.e(i, family == Family::Bn ? 1 : 2), Parity::even);
        b.eps_diagonal(one);
        return b.finish();
    }
    case Family::Dn: {
        require(p >= 2, "D_n requires n >= 2");
        Builder b(family, p, 0, p, 0, p);
        b.eps_pairs(true, Parity::even);
        b.eps_diagonal(one);
        return b.finish();
    }
    case Family::G2: return build_g2();
    }
    throw ParameterError("unknown family");
}

RootSystem build_from_spec(const std::string& spec)
{
    static const std::regex pair_re(R"(^\s*([ABD])\((\d+),(\d+)\)\s*$)");
    static const std::regex single_re(R"(^\s*([CGF])\((\d+)\)\s*$)");
    static const std::regex even_re(R"(^\s*([ABCDG])_(\d+)\s*$)");
    static const std::regex d21a_re(R"(^\s*D\(2,1;\s*(a|alpha)\)\s*$)");
    std::smatch m;
    auto num = [](const std::string& s) {
        if (s.size() > 6)
            throw ParameterError("parameter too large: " + s);
        return std::stoi(s);
    };
    if (std::regex_match(spec, m, d21a_re))
        return build(Family::D21a);
    if (std::regex_match(spec, m, pair_re)) {
        const char c = m[1].str()[0];
        const Family f = c == 'A' ? Family::A : c == 'B' ? Family::B : Family::D;
        return build(f, num(m[2]), num(m[3]));
    }
    if (std::regex_match(spec, m, single_re)) {
        const char c = m[1].str()[0];
        const int v = num(m[2]);
        if (c == 'C')
            return build(Family::C, v);
        if (c == 'G' && v == 3)
            return build(Family::G3);
        if (c == 'F' && v == 4)
            return build(Family::F4);
        throw ParameterError("unknown system: " + spec);
    }
    if (std::regex_match(spec, m, even_re)) {
        const char c = m[1].str()[0];
        const int v = num(m[2]);
        switch (c) {
        case 'A': return build(Family::An, v);
        case 'B': return build(Family::Bn, v);
        case 'C': return build(Family::Cn, v);
        case 'D': return build(Family::Dn, v);
        default:
            if (v == 2)
                return build(Family::G2);
        }
    }
    throw ParameterError("cannot parse system spec '" + spec + "'");
}

FormValue pairing(const RootSystem& rs, const Weight& a, const Weight& b)
{
    if (a.eps.size() != rs.eps_dim() || a.delta.size() != rs.delta_dim() || b.eps.size() != rs.eps_dim() ||
        b.delta.size() != rs.delta_dim())
        throw std::invalid_argument("pairing: weight dimensions do not match " + rs.name());
    return rs.form().pair(a, b);
}

std::optional<Root> find_sum(const RootSystem& rs, const Root& a, const Root& b)
{
    auto k = rs.index_of(a.weight + b.weight);
    if (!k)
        return std::nullopt;
    return rs.root(*k);
}

std::size_t expected_root_count(Family family, int p, int q)
{
    const std::size_t P = p, Q = q;
    switch (family) {
    case Family::A: {
        const std::size_t m = P + 1, n = Q + 1;
        return m * (m - 1) / 2 + n * (n - 1) / 2 + m * n;
    }
    case Family::B: return P * P + Q * Q + 2 * P * Q + Q;
    case Family::C: return (P - 1) * (P - 1) + 2 * (P - 1);
    case Family::D: return P * (P - 1) + Q * Q + 2 * P * Q;
    case Family::G3: return 14;
    case Family::F4: return 18;
    case Family::D21a: return 7;
    case Family::An: return P * (P + 1) / 2;
    case Family::Bn:
    case Family::Cn: return P * P;
    case Family::Dn: return P * (P - 1);
    case Family::G2: return 6;
    }
    return 0;
}

std::vector<std::size_t> mask_indices(const RootMask& m, std::size_t n)
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i)
        if (m.test(i))
            out.push_back(i);
    return out;
}

RootMask mask_from_indices(const std::vector<std::size_t>& idx)
{
    RootMask m;
    for (auto i : idx)
        m.set(i);
    return m;
}

RootMask mask_from_weights(const RootSystem& rs, const std::vector<Weight>& ws)
{
    RootMask m;
    for (const auto& w : ws) {
        auto i = rs.index_of(w);
        if (!i)
            throw std::invalid_argument(to_string(w) + " is not a positive root of " + rs.name());
        m.set(*i);
    }
    return m;
}

} // namespace splintkit
