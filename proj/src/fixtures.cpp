#include "splintkit/fixtures.hpp"

#include <fstream>
#include <mutex>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace splintkit {

namespace {

// A weight named in a printed set; `ok` is false when it uses a coordinate the
// target does not have (the text is kept for the report).
struct X {
    bool ok = true;
    Weight w;
    std::string text;
};

X operator+(X a, const X& b)
{
    a.ok = a.ok && b.ok;
    if (a.ok)
        a.w += b.w;
    a.text += "+" + b.text;
    return a;
}

X operator-(X a, const X& b)
{
    a.ok = a.ok && b.ok;
    if (a.ok)
        a.w -= b.w;
    a.text += "-" + b.text;
    return a;
}

class Coords {
public:
    explicit Coords(const RootSystem& rs) : rs_(rs) {}

    X e(int i, int c = 1) const { return coord(true, i, c); }
    X d(int k, int c = 1) const { return coord(false, k, c); }
    /// sum of c_i * alpha_i over the distinguished simple roots
    X simple(std::vector<int> c) const
    {
        std::vector<Rational> q(c.begin(), c.end());
        Weight w = rs_.from_simple_coordinates(q);
        return {true, w, to_string(w)};
    }

private:
    X coord(bool eps, int i, int c) const
    {
        const std::size_t dim = eps ? rs_.eps_dim() : rs_.delta_dim();
        X x;
        x.text = (c != 1 ? std::to_string(c) : std::string()) + (eps ? "e" : "d") + std::to_string(i);
        if (i < 1 || static_cast<std::size_t>(i) > dim) {
            x.ok = false;
            return x;
        }
        x.w = Weight(rs_.eps_dim(), rs_.delta_dim());
        (eps ? x.w.eps : x.w.delta)[i - 1] = c;
        return x;
    }

    const RootSystem& rs_;
};

class SetWriter {
public:
    explicit SetWriter(FixtureSets& s) : s_(s) {}

    void put(int side, const X& x)
    {
        if (!x.ok) {
            s_.out_of_range.push_back("side " + std::to_string(side) + ": " + x.text);
            return;
        }
        (side == 1 ? s_.part1 : s_.part2).push_back(x.w);
    }
    void pm(int side, const X& a, const X& b)
    {
        put(side, a - b);
        put(side, a + b);
    }

private:
    FixtureSets& s_;
};

std::string canonical(const std::string& type) { return to_string(parse_multiset(type)); }

std::string term(int k, const std::string& label)
{
    if (k <= 0)
        return {};
    return (k == 1 ? std::string() : std::to_string(k)) + label;
}

std::string join(std::initializer_list<std::string> parts)
{
    std::string out;
    for (const auto& p : parts) {
        if (p.empty())
            continue;
        if (!out.empty())
            out += "+";
        out += p;
    }
    return out;
}

std::string A(int p, int q) { return "A(" + std::to_string(p) + "," + std::to_string(q) + ")"; }
std::string B(int p, int q) { return "B(" + std::to_string(p) + "," + std::to_string(q) + ")"; }
std::string D(int p, int q) { return "D(" + std::to_string(p) + "," + std::to_string(q) + ")"; }
std::string C(int p) { return "C(" + std::to_string(p) + ")"; }
std::string X_(char fam, int n) { return std::string(1, fam) + "_" + std::to_string(n); }
const std::string A00 = "A(0,0)";

std::string mxn(int m, int n) { return std::to_string(m) + "x" + std::to_string(n); }

class Registry {
public:
    std::vector<Fixture> out;

    /// Starts a fixture; the verified typing defaults to the printed one.
    Fixture& add(std::string id, std::string item, std::string system, std::string pt1, std::string pt2)
    {
        Fixture f;
        f.id = std::move(id);
        f.item = std::move(item);
        f.system = std::move(system);
        f.paper_type1 = std::move(pt1);
        f.paper_type2 = std::move(pt2);
        f.type1 = canonical(f.paper_type1);
        f.type2 = canonical(f.paper_type2);
        out.push_back(std::move(f));
        return out.back();
    }

    /// Fills `slot` through a writer bound to the target's coordinates.
    template <class Fn>
    static void sets(std::optional<FixtureSets>& slot, const RootSystem& rs, Fn fn)
    {
        slot.emplace();
        SetWriter w(*slot);
        Coords c(rs);
        fn(w, c);
    }
};

// ------------------------------------------------------------------- A(m-1,n-1)
// m eps and n delta coordinates; "i != j" in a printed range lists the positive
// representative (i < j) as everywhere in the source.

void section_a(Registry& r)
{
    for (int N : {1, 2}) {
        const RootSystem rs = build(Family::A, 4, N);
        auto& f = r.add("III.1." + mxn(5, N + 1), "III.1", A(4, N), join({A(2, N), "A_2"}),
                        join({"2D_2", term(2 * N, A00)}));
        Registry::sets(f.printed, rs, [&](SetWriter& w, const Coords& c) {
            for (int i = 1; i <= 3; ++i)
                for (int j = i + 1; j <= 3; ++j)
                    w.put(1, c.e(i) - c.e(j));
            for (int k = 1; k <= N; ++k)
                for (int l = k + 1; l <= N; ++l)
                    w.put(1, c.d(k) - c.d(l));
            for (int k = 1; k <= N; ++k)
                for (int j = 1; j <= 3; ++j)
                    w.put(1, c.d(k) - c.e(j));
            for (int j = 4; j <= 5; ++j) {
                w.put(2, c.e(1) - c.e(j));
                w.put(2, c.e(2) - c.e(j));
                for (int k = 1; k <= N; ++k)
                    w.put(2, c.d(k) - c.e(j));
            }
        });
        f.reading_note = "printed sets taken verbatim; no reading is forced, so the verdict stands";
    }

    for (auto [m, n] : {std::pair{2, 2}, std::pair{3, 3}}) {
        const RootSystem rs = build(Family::A, m - 1, n - 1);
        auto& f = r.add("III.2." + mxn(m, n), "III.2", A(m - 1, n - 1), join({A(m - 1, 0), X_('A', n - 1)}),
                        term(m * n - m, A00));
        Registry::sets(f.printed, rs, [&](SetWriter& w, const Coords& c) {
            for (int i = 1; i <= m; ++i)
                for (int j = i + 1; j <= m; ++j)
                    w.put(1, c.e(i) - c.e(j));
            for (int j = 1; j <= m; ++j)
                w.put(1, c.d(1) - c.e(j));
            for (int k = 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l)
                    w.put(1, c.d(k) - c.d(l));
            for (int k = 2; k <= n; ++k)
                for (int l = 1; l <= m; ++l)
                    w.put(2, c.d(k) - c.e(l));
        });
    }

    for (auto [m, n] : {std::pair{2, 2}, std::pair{3, 3}}) {
        const RootSystem rs = build(Family::A, m - 1, n - 1);
        auto& f = r.add("III.3." + mxn(m, n), "III.3", A(m - 1, n - 1), join({A(0, n - 1), X_('A', m - 1)}),
                        term(m * n - n, A00));
        auto side1 = [&](SetWriter& w, const Coords& c) {
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    w.put(1, c.d(i) - c.d(j));
            for (int j = 1; j <= n; ++j)
                w.put(1, c.d(j) - c.e(1));
            for (int k = 1; k <= m; ++k)
                for (int l = k + 1; l <= m; ++l)
                    w.put(1, c.e(k) - c.e(l));
        };
        Registry::sets(f.printed, rs, [&](SetWriter& w, const Coords& c) {
            side1(w, c);
            for (int k = 1; k <= m; ++k)
                for (int l = 2; l <= n; ++l)
                    w.put(2, c.d(k) - c.e(l));
        });
        Registry::sets(f.reading, rs, [&](SetWriter& w, const Coords& c) {
            side1(w, c);
            for (int k = 1; k <= n; ++k)
                for (int l = 2; l <= m; ++l)
                    w.put(2, c.d(k) - c.e(l));
        });
        f.reading_note = "side 2 ranges swapped: d_k-e_l for 1<=k<=n, 2<=l<=m (identical to the print when m=n)";
    }

    for (int n : {1, 2}) {
        const int m = n + 1;
        const RootSystem rs = build(Family::A, m - 1, n - 1);
        auto& f = r.add("III.4." + mxn(m, n), "III.4", A(m - 1, n - 1), A(n - 1, n - 1),
                        join({term(n, "A_1"), term(n, A00)}));
        auto body = [&](SetWriter& w, const Coords& c, bool diagonal) {
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    w.put(1, c.e(i) - c.e(j));
                    w.put(1, c.d(i) - c.d(j));
                }
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j)
                    if (diagonal || i != j)
                        w.put(1, c.d(i) - c.e(j));
            for (int i = 1; i <= n; ++i) {
                w.put(2, c.e(i) - c.e(m));
                w.put(2, c.d(i) - c.e(m));
            }
        };
        Registry::sets(f.printed, rs, [&](SetWriter& w, const Coords& c) { body(w, c, false); });
        Registry::sets(f.reading, rs, [&](SetWriter& w, const Coords& c) { body(w, c, true); });
        f.reading_note = "the odd roots d_i-e_j of side 1 include i=j (the range i!=j is meant for the even roots)";
    }

    for (auto [m, n] : {std::pair{3, 1}, std::pair{4, 2}}) {
        const RootSystem rs = build(Family::A, m - 1, n - 1);
        auto& f = r.add("III.5." + mxn(m, n), "III.5", A(m - 1, n - 1), join({A(1, n), X_('A', m - 2)}),
                        join({term(m - 2, "A_1"), term(n * (m - 2), A00)}));
        f.type1 = canonical(join({A(1, n - 1), X_('A', m - 2)}));
        f.reading_note = "label A(1,n) read as A(1,n-1): the printed component uses n delta coordinates";
        Registry::sets(f.printed, rs, [&](SetWriter& w, const Coords& c) {
            w.put(1, c.e(1) - c.e(2));
            for (int k = 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l)
                    w.put(1, c.d(k) - c.d(l));
            for (int k = 1; k <= n; ++k) {
                w.put(1, c.d(k) - c.e(1));
                w.put(1, c.d(k) - c.e(2));
            }
            for (int i = 2; i <= m; ++i)
                for (int j = i + 1; j <= m; ++j)
                    w.put(1, c.e(i) - c.e(j));
            for (int j = 3; j <= m; ++j) {
                w.put(2, c.e(1) - c.e(j));
                for (int i = 1; i <= n; ++i)
                    w.put(2, c.d(i) - c.e(j));
            }
        });
    }

    for (auto [m, n] : {std::pair{1, 3}, std::pair{2, 4}}) {
        const RootSystem rs = build(Family::A, m - 1, n - 1);
        auto& f = r.add("III.6." + mxn(m, n), "III.6", A(m - 1, n - 1), join({A(m, 1), X_('A', n - 2)}),
                        join({term(n - 2, "A_1"), term(m * (n - 2), A00)}));
        f.type1 = canonical(join({A(m - 1, 1), X_('A', n - 2)}));
        f.reading_note = "label A(m,1) read as A(m-1,1): the printed component uses m eps coordinates";
        Registry::sets(f.printed, rs, [&](SetWriter& w, const Coords& c) {
            for (int k = 1; k <= m; ++k)
                for (int l = k + 1; l <= m; ++l)
                    w.put(1, c.e(k) - c.e(l));
            w.put(1, c.d(1) - c.d(2));
            for (int k = 1; k <= m; ++k) {
                w.put(1, c.d(1) - c.e(k));
                w.put(1, c.d(2) - c.e(k));
            }
            for (int i = 2; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    w.put(1, c.d(i) - c.d(j));
            for (int j = 3; j <= n; ++j) {
                w.put(2, c.d(1) - c.d(j));
                for (int k = 1; k <= m; ++k)
                    w.put(2, c.d(j) - c.e(k));
            }
        });
    }

    for (auto [m, n] : {std::pair{2, 2}, std::pair{3, 3}}) {
        const RootSystem rs = build(Family::A, m - 1, n - 1);
        auto& f = r.add("III.7." + mxn(m, n), "III.7", A(m - 1, n - 1), join({A(m - 2, n - 2), A(1, 0)}),
                        join({term(m + n - 3, "A_1"), term(m + n - 3, A00)}));
        auto body = [&](SetWriter& w, const Coords& c, int last_i) {
            for (int i = 2; i <= m; ++i)
                for (int j = i + 1; j <= m; ++j)
                    w.put(1, c.e(i) - c.e(j));
            for (int k = 2; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l)
                    w.put(1, c.d(k) - c.d(l));
            for (int k = 2; k <= n; ++k)
                for (int i = 2; i <= m; ++i)
                    w.put(1, c.d(k) - c.e(i));
            w.put(1, c.e(1) - c.e(2));
            w.put(1, c.d(1) - c.e(1));
            w.put(1, c.d(1) - c.e(2));
            for (int i = 3; i <= last_i; ++i) {
                w.put(2, c.e(1) - c.e(i));
                w.put(2, c.d(1) - c.e(i));
            }
            for (int k = 2; k <= n; ++k) {
                w.put(2, c.d(1) - c.d(k));
                w.put(2, c.d(k) - c.e(1));
            }
        };
        // printed "3 <= i != m": i runs from 3 and skips m
        Registry::sets(f.printed, rs, [&](SetWriter& w, const Coords& c) { body(w, c, m - 1); });
        Registry::sets(f.reading, rs, [&](SetWriter& w, const Coords& c) { body(w, c, m); });
        f.reading_note = "side 2 range \"3<=i!=m\" read as 3<=i<=m";
    }

    // items 8 and 10 share their sets (10 is 8 at m=n); so do 9 and 11 up to the typo in 11
    auto drop_last_delta = [](SetWriter& w, const Coords& c, int m, int n) {
        for (int i = 1; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j)
                w.put(1, c.e(i) - c.e(j));
        for (int k = 1; k <= n - 1; ++k)
            for (int l = k + 1; l <= n - 1; ++l)
                w.put(1, c.d(k) - c.d(l));
        for (int k = 1; k <= n - 1; ++k)
            for (int i = 1; i <= m; ++i)
                w.put(1, c.d(k) - c.e(i));
        for (int k = 1; k <= n - 1; ++k)
            w.put(2, c.d(k) - c.d(n));
        for (int i = 1; i <= m; ++i)
            w.put(2, c.d(n) - c.e(i));
    };
    auto drop_last_eps_side1 = [](SetWriter& w, const Coords& c, int m, int n) {
        for (int i = 1; i <= m - 1; ++i)
            for (int j = i + 1; j <= m - 1; ++j)
                w.put(1, c.e(i) - c.e(j));
        for (int k = 1; k <= n; ++k)
            for (int l = k + 1; l <= n; ++l)
                w.put(1, c.d(k) - c.d(l));
        for (int k = 1; k <= n; ++k)
            for (int i = 1; i <= m - 1; ++i)
                w.put(1, c.d(k) - c.e(i));
    };

    for (auto [m, n] : {std::pair{2, 2}, std::pair{3, 3}}) {
        const RootSystem rs = build(Family::A, m - 1, n - 1);
        auto& f = r.add("III.8." + mxn(m, n), "III.8", A(m - 1, n - 1), A(m - 1, n - 2),
                        join({term(n - 1, "A_1"), term(m, A00)}));
        Registry::sets(f.printed, rs, [&](SetWriter& w, const Coords& c) { drop_last_delta(w, c, m, n); });
    }

    for (auto [m, n] : {std::pair{2, 2}, std::pair{3, 3}}) {
        const RootSystem rs = build(Family::A, m - 1, n - 1);
        auto& f = r.add("III.9." + mxn(m, n), "III.9", A(m - 1, n - 1), A(m - 2, n - 1),
                        join({term(m - 1, "A_1"), term(n, A00)}));
        Registry::sets(f.printed, rs, [&](SetWriter& w, const Coords& c) {
            drop_last_eps_side1(w, c, m, n);
            for (int j = 1; j <= m - 1; ++j)
                w.put(2, c.e(j) - c.e(m));
            for (int i = 1; i <= n; ++i)
                w.put(2, c.d(i) - c.e(m));
        });
    }

    for (int m : {2, 3}) {
        const RootSystem rs = build(Family::A, m - 1, m - 1);
        auto& f = r.add("III.10.m" + std::to_string(m), "III.10", A(m - 1, m - 1), A(m - 1, m - 2),
                        join({term(m - 1, "A_1"), term(m, A00)}));
        Registry::sets(f.printed, rs, [&](SetWriter& w, const Coords& c) { drop_last_delta(w, c, m, m); });
    }

    for (int m : {2, 3}) {
        const RootSystem rs = build(Family::A, m - 1, m - 1);
        auto& f = r.add("III.11.m" + std::to_string(m), "III.11", A(m - 1, m - 1), A(m - 2, m - 1),
                        join({term(m - 1, "A_1"), term(m, A00)}));
        auto body = [&](SetWriter& w, const Coords& c, bool fixed) {
            drop_last_eps_side1(w, c, m, m);
            for (int i = 1; i <= m - 1; ++i)
                w.put(2, c.e(i) - c.e(m));
            for (int j = 1; j <= m; ++j)
                w.put(2, fixed ? c.d(j) - c.e(m) : c.d(m) - c.e(j));
        };
        Registry::sets(f.printed, rs, [&](SetWriter& w, const Coords& c) { body(w, c, false); });
        Registry::sets(f.reading, rs, [&](SetWriter& w, const Coords& c) { body(w, c, true); });
        f.reading_note = "side 2 odd roots d_m-e_j read as d_j-e_m (the printed ones already lie in side 1)";
    }

    for (int m : {2, 3}) {
        const RootSystem rs = build(Family::A, m - 1, m - 1);
        auto& f = r.add("III.12.m" + std::to_string(m), "III.12", A(m - 1, m - 1), A(m - 2, m - 2),
                        join({term(2 * (m - 1), "A_1"), term(2 * m - 1, A00)}));
        auto body = [&](SetWriter& w, const Coords& c, bool diagonal) {
            for (int i = 1; i <= m - 1; ++i)
                for (int j = i + 1; j <= m - 1; ++j) {
                    w.put(1, c.e(i) - c.e(j));
                    w.put(1, c.d(i) - c.d(j));
                }
            for (int i = 1; i <= m - 1; ++i)
                for (int j = 1; j <= m - 1; ++j)
                    if (diagonal || i != j)
                        w.put(1, c.d(i) - c.e(j));
            for (int i = 1; i <= m - 1; ++i) {
                w.put(2, c.e(i) - c.e(m));
                w.put(2, c.d(i) - c.d(m));
                w.put(2, c.d(i) - c.e(m));
            }
            for (int j = 1; j <= m; ++j)
                w.put(2, c.d(m) - c.e(j));
        };
        Registry::sets(f.printed, rs, [&](SetWriter& w, const Coords& c) { body(w, c, false); });
        Registry::sets(f.reading, rs, [&](SetWriter& w, const Coords& c) { body(w, c, true); });
        f.reading_note = "the odd roots d_i-e_j of side 1 include i=j";
    }
}

// ------------------------------------------------------------------- B(m,n)

void section_b(Registry& r)
{
    {
        const RootSystem rs = build(Family::B, 1, 1);
        auto& f = r.add("IV.1", "IV.1", B(1, 1), "A(0,1)", "A_1+2A(0,0)");
        Registry::sets(f.printed, rs, [&](SetWriter& w, const Coords& c) {
            w.put(1, c.d(1) - c.e(1));
            w.put(1, c.e(1));
            w.put(1, c.d(1));
            w.put(2, c.d(1) + c.e(1));
            w.put(2, c.d(1, 2));
        });
    }
    {
        const RootSystem rs = build(Family::B, 1, 2);
        auto& f = r.add("IV.2a", "IV.2", B(1, 2), "A(0,1)+A_1", "3A_1+4A(0,0)");
        Registry::sets(f.printed, rs, [&](SetWriter& w, const Coords& c) {
            w.put(1, c.d(1) - c.d(2));
            w.put(1, c.d(1) - c.e(1));
            w.put(1, c.d(2) - c.e(1));
            w.put(1, c.e(1));
            w.put(2, c.d(1) + c.d(2));
            w.put(2, c.d(1, 2));
            w.put(2, c.d(2, 2));
            w.put(2, c.d(2) + c.e(1));
            w.put(2, c.d(1) + c.e(1));
            w.put(2, c.d(1));
            w.put(2, c.d(2));
        });
        auto& g = r.add("IV.2b", "IV.2", B(1, 2), "B(0,2)", "A_1+4A(0,0)");
        Registry::sets(g.printed, rs, [&](SetWriter& w, const Coords& c) {
            w.pm(1, c.d(1), c.d(2));
            w.put(1, c.d(1, 2));
            w.put(1, c.d(2, 2));
            w.put(1, c.d(1));
            w.put(1, c.d(2));
            w.put(2, c.e(1));
            w.pm(2, c.d(1), c.e(1));
            w.pm(2, c.d(2), c.e(1));
        });
    }
    {
        const RootSystem rs = build(Family::B, 2, 2);
        auto& f = r.add("IV.3", "IV.3", B(2, 2), "A(1,1)+2A_1", "4A_1+6A(0,0)");
        Registry::sets(f.printed, rs, [&](SetWriter& w, const Coords& c) {
            w.put(1, c.e(1) - c.e(2));
            w.put(1, c.d(1) - c.d(2));
            for (int k = 1; k <= 2; ++k)
                for (int i = 1; i <= 2; ++i)
                    w.put(1, c.d(k) - c.e(i));
            w.put(1, c.e(1) + c.e(2));
            w.put(1, c.d(1) + c.d(2));
            w.put(2, c.e(1));
            w.put(2, c.e(2));
            w.put(2, c.d(1, 2));
            w.put(2, c.d(2, 2));
            for (int k = 1; k <= 2; ++k)
                for (int i = 1; i <= 2; ++i)
                    w.put(2, c.d(k) + c.e(i));
            w.put(2, c.d(1));
            w.put(2, c.d(2));
        });
    }
    {
        const RootSystem rs = build(Family::B, 0, 2);
        auto& f = r.add("IV.4a", "IV.4", B(0, 2), "A_2", "A_1+2A(0,0)");
        Registry::sets(f.printed, rs, [&](SetWriter& w, const Coords& c) {
            w.pm(1, c.d(1), c.d(2));
            w.put(1, c.d(2, 2));
            w.put(2, c.d(1, 2));
            w.put(2, c.d(1));
            w.put(2, c.d(2));
        });
        auto& g = r.add("IV.4b", "IV.4", B(0, 2), "2A_1+A(0,0)", "2A_1+A(0,0)");
        Registry::sets(g.printed, rs, [&](SetWriter& w, const Coords& c) {
            w.put(1, c.d(1) + c.d(2));
            w.put(1, c.d(2, 2));
            w.put(1, c.d(1));
            w.put(2, c.d(1) - c.d(2));
            w.put(2, c.d(1, 2));
            w.put(2, c.d(2));
        });
    }
    {
        const RootSystem rs = build(Family::B, 0, 3);
        auto& f = r.add("IV.5", "IV.5", B(0, 3), "A_1+B(0,2)", "A_1+A_2+A(0,0)");
        Registry::sets(f.printed, rs, [&](SetWriter& w, const Coords& c) {
            w.pm(1, c.d(1), c.d(2));
            w.put(1, c.d(1, 2));
            w.put(1, c.d(2, 2));
            w.put(1, c.d(1));
            w.put(1, c.d(2));
            w.put(1, c.d(2) - c.d(3));
            w.put(2, c.d(2) + c.d(3));
            w.pm(2, c.d(1), c.d(3));
            w.put(2, c.d(3, 2));
            w.put(2, c.d(3));
        });
    }
    for (int n : {2, 3}) {
        const RootSystem rs = build(Family::B, 0, n);
        auto& f = r.add("IV.6.n" + std::to_string(n), "IV.6", B(0, n), X_('D', n), term(n, B(0, 1)));
        Registry::sets(f.printed, rs, [&](SetWriter& w, const Coords& c) {
            for (int k = 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l)
                    w.pm(1, c.d(k), c.d(l));
            for (int k = 1; k <= n; ++k) {
                w.put(2, c.d(k, 2));
                w.put(2, c.d(k));
            }
        });
    }
    for (int n : {2, 3}) {
        const RootSystem rs = build(Family::B, 0, n);
        auto& f = r.add("IV.7.n" + std::to_string(n), "IV.7", B(0, n), X_('C', n), term(n, A00));
        Registry::sets(f.printed, rs, [&](SetWriter& w, const Coords& c) {
            for (int k = 1; k <= n; ++k) {
                for (int l = k + 1; l <= n; ++l)
                    w.pm(1, c.d(k), c.d(l));
                w.put(1, c.d(k, 2));
                w.put(2, c.d(k));
            }
        });
    }
    for (auto [m, n] : {std::pair{2, 1}, std::pair{2, 2}, std::pair{3, 2}}) {
        const RootSystem rs = build(Family::B, m, n);
        auto even_part = [&](SetWriter& w, const Coords& c) {
            for (int k = 1; k <= n; ++k) {
                for (int l = k + 1; l <= n; ++l)
                    w.pm(1, c.d(k), c.d(l));
                w.put(1, c.d(k, 2));
            }
            for (int i = 1; i <= m; ++i)
                for (int j = i + 1; j <= m; ++j)
                    w.pm(1, c.e(i), c.e(j));
        };
        auto& f = r.add("IV.8." + mxn(m, n), "IV.8", B(m, n), join({B(0, n), X_('B', m)}), term(2 * m * n, A00));
        Registry::sets(f.printed, rs, [&](SetWriter& w, const Coords& c) {
            even_part(w, c);
            for (int k = 1; k <= n; ++k)
                w.put(1, c.d(k));
            // printed: d_i-e_k with 1<=i<=m, 1<=k<=n
            for (int i = 1; i <= m; ++i)
                for (int k = 1; k <= n; ++k)
                    w.put(2, c.d(i) - c.e(k));
        });
        Registry::sets(f.reading, rs, [&](SetWriter& w, const Coords& c) {
            even_part(w, c);
            for (int k = 1; k <= n; ++k)
                w.put(1, c.d(k));
            for (int i = 1; i <= m; ++i)
                w.put(1, c.e(i));
            for (int k = 1; k <= n; ++k)
                for (int i = 1; i <= m; ++i)
                    w.pm(2, c.d(k), c.e(i));
        });
        f.reading_note = "side 1 also holds the short roots e_i of B_m; side 2 is d_k+-e_i (1<=k<=n, 1<=i<=m)";

        // second typing of the equivalence note; the source states no sets for it
        auto& g = r.add("IV.8alt." + mxn(m, n), "IV.8", B(m, n), join({X_('B', m), X_('C', n)}),
                        term(2 * m * n + n, A00));
        Registry::sets(g.reading, rs, [&](SetWriter& w, const Coords& c) {
            even_part(w, c);
            for (int i = 1; i <= m; ++i)
                w.put(1, c.e(i));
            for (int k = 1; k <= n; ++k) {
                w.put(2, c.d(k));
                for (int i = 1; i <= m; ++i)
                    w.pm(2, c.d(k), c.e(i));
            }
        });
        g.reading_note = "sets not printed; built from IV.8 by moving the odd roots d_k to side 2, which leaves "
                         "the even restriction unchanged";
    }
    for (auto [m, n] : {std::pair{2, 1}, std::pair{3, 2}}) {
        const RootSystem rs = build(Family::B, m, n);
        auto& f = r.add("IV.9." + mxn(m, n), "IV.9", B(m, n), D(m, n), join({term(m, "A_1"), term(n, A00)}));
        auto even_part = [&](SetWriter& w, const Coords& c) {
            for (int k = 1; k <= n; ++k) {
                for (int l = k + 1; l <= n; ++l)
                    w.pm(1, c.d(k), c.d(l));
                w.put(1, c.d(k, 2));
            }
            for (int i = 1; i <= m; ++i)
                for (int j = i + 1; j <= m; ++j)
                    w.pm(1, c.e(i), c.e(j));
        };
        Registry::sets(f.printed, rs, [&](SetWriter& w, const Coords& c) {
            even_part(w, c);
            for (int k = 1; k <= n; ++k)
                for (int i = 1; i <= m; ++i)
                    w.put(1, c.d(k) - c.e(i));
            // printed: d_i, e_k with 1<=i<=m, 1<=k<=n
            for (int i = 1; i <= m; ++i)
                w.put(2, c.d(i));
            for (int k = 1; k <= n; ++k)
                w.put(2, c.e(k));
        });
        Registry::sets(f.reading, rs, [&](SetWriter& w, const Coords& c) {
            even_part(w, c);
            for (int k = 1; k <= n; ++k)
                for (int i = 1; i <= m; ++i)
                    w.pm(1, c.d(k), c.e(i));
            for (int i = 1; i <= m; ++i)
                w.put(2, c.e(i));
            for (int k = 1; k <= n; ++k)
                w.put(2, c.d(k));
        });
        f.reading_note = "side 1 odd roots are d_k+-e_i (D(m,n) needs both signs); side 2 ranges swapped: "
                         "e_i (1<=i<=m), d_k (1<=k<=n)";
    }
}

// ------------------------------------------------------------------- C(n+1)
// one eps coordinate (e1 = eps) and n delta coordinates

void section_c(Registry& r)
{
    for (int n : {1, 2, 4}) {
        const RootSystem rs = build(Family::C, n + 1);
        auto& f = r.add("V.1.n" + std::to_string(n), "V.1", C(n + 1), X_('C', n), term(2 * n, A00));
        Registry::sets(f.printed, rs, [&](SetWriter& w, const Coords& c) {
            for (int k = 1; k <= n; ++k) {
                for (int l = k + 1; l <= n; ++l)
                    w.pm(1, c.d(k), c.d(l));
                w.put(1, c.d(k, 2));
                w.pm(2, c.e(1), c.d(k));
            }
        });
    }
    {
        const RootSystem rs = build(Family::C, 3);
        auto& f = r.add("V.2a", "V.2", C(3), "A_2", "C(2)+2A(0,0)");
        Registry::sets(f.printed, rs, [&](SetWriter& w, const Coords& c) {
            w.pm(1, c.d(1), c.d(2));
            w.put(1, c.d(1, 2));
            w.put(2, c.d(2, 2));
            w.pm(2, c.e(1), c.d(2));
            w.pm(2, c.e(1), c.d(1));
        });
        f.reading_note = "transcription: the missing comma in \"2d2 e+-d2\" is restored";
        auto& g = r.add("V.2b", "V.2", C(3), "C(2)+A_1", "C(2)+A_1");
        Registry::sets(g.printed, rs, [&](SetWriter& w, const Coords& c) {
            w.put(1, c.d(1, 2));
            w.pm(1, c.e(1), c.d(1));
            w.put(1, c.d(1) - c.d(2));
            w.put(2, c.d(2, 2));
            w.pm(2, c.e(1), c.d(2));
            w.put(2, c.d(1) + c.d(2));
        });
    }
    {
        const RootSystem rs = build(Family::C, 4);
        auto& f = r.add("V.3a", "V.3", C(4), "A_1+B_2+2A(0,0)", "A_1+A_2+4A(0,0)");
        Registry::sets(f.printed, rs, [&](SetWriter& w, const Coords& c) {
            w.put(1, c.d(2) - c.d(3));
            w.put(1, c.d(1, 2));
            w.put(1, c.d(2, 2));
            w.pm(1, c.d(1), c.d(2));
            w.pm(1, c.e(1), c.d(3));
            w.put(2, c.d(2) + c.d(3));
            w.put(2, c.d(3, 2));
            w.pm(2, c.d(1), c.d(3));
            w.pm(2, c.e(1), c.d(1));
            w.pm(2, c.e(1), c.d(2));
        });
        auto& g = r.add("V.3b", "V.3", C(4), "C(3)+A_1", "D_2+D_2+2A(0,0)");
        Registry::sets(g.printed, rs, [&](SetWriter& w, const Coords& c) {
            w.pm(1, c.d(1), c.d(2));
            w.put(1, c.d(1, 2));
            w.put(1, c.d(2, 2));
            w.pm(1, c.e(1), c.d(1));
            w.pm(1, c.e(1), c.d(2));
            w.put(1, c.d(3, 2));
            w.pm(2, c.d(1), c.d(3));
            w.pm(2, c.d(2), c.d(3));
            w.pm(2, c.e(1), c.d(3));
        });
    }
}

// ------------------------------------------------------------------- D(m,n)

void section_d(Registry& r)
{
    {
        const RootSystem rs = build(Family::D, 2, 1);
        auto& f = r.add("VI.1", "VI.1", D(2, 1), "A(1,0)", "2A_1+2A(0,0)");
        Registry::sets(f.printed, rs, [&](SetWriter& w, const Coords& c) {
            w.put(1, c.e(1) - c.e(2));
            w.put(1, c.d(1) - c.e(1));
            w.put(1, c.d(1) - c.e(2));
            w.put(2, c.d(1, 2));
            w.put(2, c.e(1) + c.e(2));
            w.put(2, c.d(1) + c.e(1));
            w.put(2, c.d(1) + c.e(2));
        });
    }
    {
        const RootSystem rs = build(Family::D, 2, 2);
        auto& f = r.add("VI.2", "VI.2", D(2, 2), "A(1,1)", "4A_1+A(0,0)");
        Registry::sets(f.printed, rs, [&](SetWriter& w, const Coords& c) {
            w.put(1, c.e(1) - c.e(2));
            w.put(1, c.d(1) - c.d(2));
            for (int k = 1; k <= 2; ++k)
                for (int i = 1; i <= 2; ++i)
                    w.put(1, c.d(k) - c.e(i));
            w.put(2, c.e(1) + c.e(2));
            w.put(2, c.d(1) + c.d(2));
            w.put(2, c.d(1, 2));
            w.put(2, c.d(2, 2));
            for (int k = 1; k <= 2; ++k)
                for (int i = 1; i <= 2; ++i)
                    w.put(2, c.d(k) + c.e(i));
        });
    }
    {
        const RootSystem rs = build(Family::D, 3, 1);
        auto& f = r.add("VI.3", "VI.3", D(3, 1), "A(2,0)", "4A_1+3A(0,0)");
        Registry::sets(f.printed, rs, [&](SetWriter& w, const Coords& c) {
            for (int i = 1; i <= 3; ++i)
                for (int j = i + 1; j <= 3; ++j) {
                    w.put(1, c.e(i) - c.e(j));
                    w.put(2, c.e(i) + c.e(j));
                }
            for (int i = 1; i <= 3; ++i) {
                w.put(1, c.d(1) - c.e(i));
                w.put(2, c.d(1) + c.e(i));
            }
            w.put(2, c.d(1, 2));
        });
    }
    {
        const RootSystem rs = build(Family::D, 3, 2);
        auto& f = r.add("VI.4", "VI.4", D(3, 2), "A(2,1)+A_1", "5A_1+6A(0,0)");
        Registry::sets(f.printed, rs, [&](SetWriter& w, const Coords& c) {
            for (int i = 1; i <= 3; ++i)
                for (int j = i + 1; j <= 3; ++j) {
                    w.put(1, c.e(i) - c.e(j));
                    w.put(2, c.e(i) + c.e(j));
                }
            w.put(1, c.d(1) - c.d(2));
            w.put(2, c.d(1) + c.d(2));
            for (int k = 1; k <= 2; ++k)
                for (int i = 1; i <= 3; ++i) {
                    w.put(1, c.d(k) - c.e(i));
                    w.put(2, c.d(k) + c.e(i));
                }
            w.put(1, c.d(2, 2));
            w.put(2, c.d(1, 2));
        });
    }
    {
        const RootSystem rs = build(Family::D, 2, 3);
        auto& f = r.add("VI.5", "VI.5", D(2, 3), "A(1,2)+2A_1", "5A_1+6A(0,0)");
        Registry::sets(f.printed, rs, [&](SetWriter& w, const Coords& c) {
            w.put(1, c.e(1) - c.e(2));
            w.put(2, c.e(1) + c.e(2));
            for (int k = 1; k <= 3; ++k)
                for (int l = k + 1; l <= 3; ++l) {
                    w.put(1, c.d(k) - c.d(l));
                    w.put(2, c.d(k) + c.d(l));
                }
            for (int i = 1; i <= 2; ++i)
                for (int k = 1; k <= 3; ++k) {
                    w.put(1, c.d(k) - c.e(i));
                    w.put(2, c.d(k) + c.e(i));
                }
            w.put(1, c.d(1, 2));
            w.put(1, c.d(2, 2));
            w.put(2, c.d(3, 2));
        });
        f.reading_note = "the second set is printed as a second \"Delta_1\" and is taken as Delta_2; the table "
                         "writes the type as \"A(1,2)2+A_1\", the item text as A(1,2)+2A_1";
    }
    for (auto [m, n] : {std::pair{2, 2}, std::pair{3, 3}}) {
        const RootSystem rs = build(Family::D, m, n);
        auto& f = r.add("VI.6a." + mxn(m, n), "VI.6", D(m, n), join({D(m, n - 1), "A_1"}),
                        join({term(2 * n - 2, "A_1"), term(2 * m, A00)}));
        Registry::sets(f.printed, rs, [&](SetWriter& w, const Coords& c) {
            for (int i = 1; i <= m; ++i)
                for (int j = i + 1; j <= m; ++j)
                    w.pm(1, c.e(i), c.e(j));
            for (int k = 2; k <= n; ++k) {
                for (int l = k + 1; l <= n; ++l)
                    w.pm(1, c.d(k), c.d(l));
                w.put(1, c.d(k, 2));
                for (int i = 1; i <= m; ++i)
                    w.pm(1, c.d(k), c.e(i));
            }
            w.put(1, c.d(1, 2));
            for (int l = 2; l <= n; ++l)
                w.pm(2, c.d(1), c.d(l));
            for (int i = 1; i <= m; ++i)
                w.pm(2, c.d(1), c.e(i));
        });
    }
    for (auto [m, n] : {std::pair{2, 1}, std::pair{3, 2}}) {
        const RootSystem rs = build(Family::D, m, n);
        auto& f = r.add("VI.6b." + mxn(m, n), "VI.6", D(m, n), D(m - 1, n),
                        join({term(2 * m - 2, "A_1"), term(2 * n, A00)}));
        auto body = [&](SetWriter& w, const Coords& c, bool fixed) {
            for (int i = 2; i <= m; ++i)
                for (int j = i + 1; j <= m; ++j)
                    w.pm(1, c.e(i), c.e(j));
            for (int k = 1; k <= n; ++k) {
                for (int l = k + 1; l <= n; ++l)
                    w.pm(1, c.d(k), c.d(l));
                w.put(1, c.d(k, 2));
                for (int i = 2; i <= m; ++i)
                    w.pm(1, c.d(k), c.e(i));
            }
            for (int i = 2; i <= m; ++i)
                w.pm(2, c.e(1), c.e(i));
            for (int k = 1; k <= n; ++k)
                w.pm(2, fixed ? c.d(k) : c.d(1), fixed ? c.e(1) : c.e(k));
        };
        // printed "d1+-e_k : 1<=l<=n" binds no l; the index k is run over 1..n
        Registry::sets(f.printed, rs, [&](SetWriter& w, const Coords& c) { body(w, c, false); });
        Registry::sets(f.reading, rs, [&](SetWriter& w, const Coords& c) { body(w, c, true); });
        f.reading_note = "side 2 odd roots read as d_l+-e1 (1<=l<=n); the print has d1+-e_k with range on l";
    }
    for (auto [m, n] : {std::pair{2, 2}, std::pair{3, 3}}) {
        const RootSystem rs = build(Family::D, m, n);
        auto& f = r.add("VI.7." + mxn(m, n), "VI.7", D(m, n), join({X_('D', m), X_('C', n)}),
                        term(2 * m * n, A00));
        auto body = [&](SetWriter& w, const Coords& c, bool fixed) {
            for (int i = 1; i <= m; ++i)
                for (int j = i + 1; j <= m; ++j)
                    w.pm(1, c.e(i), c.e(j));
            for (int k = 1; k <= n; ++k) {
                for (int l = k + 1; l <= n; ++l)
                    w.pm(1, c.d(k), c.d(l));
                w.put(1, c.d(k, 2));
            }
            if (fixed) {
                for (int k = 1; k <= n; ++k)
                    for (int i = 1; i <= m; ++i)
                        w.pm(2, c.d(k), c.e(i));
            } else {
                // printed: d_i+-e_k with 1<=i<=m, 1<=k<=n
                for (int i = 1; i <= m; ++i)
                    for (int k = 1; k <= n; ++k)
                        w.pm(2, c.d(i), c.e(k));
            }
        };
        f.paper_type1 = X_('D', m) + "+C{" + std::to_string(n) + "}";
        Registry::sets(f.printed, rs, [&](SetWriter& w, const Coords& c) { body(w, c, false); });
        Registry::sets(f.reading, rs, [&](SetWriter& w, const Coords& c) { body(w, c, true); });
        f.reading_note = "label \"C{n}\" read as C_n; side 2 ranges swapped when m!=n (identical at m=n)";
    }
}

// ------------------------------------------------------------------- G(3), F(4), D(2,1;alpha)
// sets given in simple-root coordinates

void section_exceptional(Registry& r)
{
    {
        const RootSystem rs = build(Family::G3);
        auto& f = r.add("VII.1a", "VII.1", "G(3)", "A_2+3A(0,0)", "A_2+A_1+4A(0,0)");
        Registry::sets(f.printed, rs, [&](SetWriter& w, const Coords& c) {
            for (auto v : std::vector<std::vector<int>>{{0, 1, 0}, {0, 1, 1}, {0, 2, 1}, {1, 1, 0}, {1, 1, 1}, {1, 3, 1}})
                w.put(1, c.simple(v));
            for (auto v : std::vector<std::vector<int>>{
                     {0, 0, 1}, {0, 3, 1}, {0, 3, 2}, {1, 0, 0}, {1, 2, 1}, {1, 3, 2}, {1, 4, 2}, {2, 4, 2}})
                w.put(2, c.simple(v));
        });
        auto& g = r.add("VII.1b", "VII.1", "G(3)", "B_2+A_1+3A(0,0)", "2A_1+4A(0,0)");
        Registry::sets(g.printed, rs, [&](SetWriter& w, const Coords& c) {
            for (auto v : std::vector<std::vector<int>>{
                     {0, 1, 0}, {0, 0, 1}, {0, 1, 1}, {0, 2, 1}, {2, 4, 2}, {1, 0, 0}, {1, 1, 0}, {1, 1, 1}})
                w.put(1, c.simple(v));
            for (auto v : std::vector<std::vector<int>>{{0, 3, 1}, {0, 3, 2}, {1, 2, 1}, {1, 3, 2}, {1, 4, 2}, {1, 3, 1}})
                w.put(2, c.simple(v));
        });
    }
    {
        const RootSystem rs = build(Family::F4);
        auto& f = r.add("VII.2", "VII.2", "F(4)", "A_1+B_3", "8A(0,0)");
        f.printed.emplace();
        for (const Root& root : rs.roots())
            (root.parity == Parity::even ? f.printed->part1 : f.printed->part2).push_back(root.weight);
    }
    {
        const RootSystem rs = build(Family::D21a);
        auto& f = r.add("VII.3a", "VII.3", "D(2,1;a)", "A(1,0)+A_1", "A_1+2A(0,0)");
        Registry::sets(f.printed, rs, [&](SetWriter& w, const Coords& c) {
            for (auto v : std::vector<std::vector<int>>{{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}})
                w.put(1, c.simple(v));
            for (auto v : std::vector<std::vector<int>>{{2, 1, 1}, {1, 0, 1}, {1, 1, 1}})
                w.put(2, c.simple(v));
        });
        auto& g = r.add("VII.3b", "VII.3", "D(2,1;a)", "3A_1", "4A(0,0)");
        auto side2 = [](SetWriter& w, const Coords& c) {
            for (auto v : std::vector<std::vector<int>>{{1, 0, 0}, {1, 1, 0}, {1, 0, 1}, {1, 1, 1}})
                w.put(2, c.simple(v));
        };
        Registry::sets(g.printed, rs, [&](SetWriter& w, const Coords& c) {
            for (auto v : std::vector<std::vector<int>>{{1, 0, 0}, {0, 0, 1}, {2, 1, 1}})
                w.put(1, c.simple(v));
            side2(w, c);
        });
        Registry::sets(g.reading, rs, [&](SetWriter& w, const Coords& c) {
            for (auto v : std::vector<std::vector<int>>{{0, 1, 0}, {0, 0, 1}, {2, 1, 1}})
                w.put(1, c.simple(v));
            side2(w, c);
        });
        g.reading_note = "side 1 is the three even roots {alpha2, alpha3, 2alpha1+alpha2+alpha3}; the print "
                         "repeats the odd alpha1 there";
    }
}

// ------------------------------------------------------------------- table-only rows

void tables(Registry& r)
{
    struct Row {
        const char* id;
        const char* system;
        const char* t1;
        const char* t2;
    };
    const Row rows[] = {
        {"TI.1", "A(1,0)", "A_1", "2A(0,0)"},
        {"TI.2", "A(0,1)", "A_1", "2A(0,0)"},
        {"TI.5", "A(1,1)", "2A_1", "4A(0,0)"},
        {"TI.6", "A(1,2)", "A(0,2)", "2A_1+3A(0,0)"},
        {"TI.7", "A(1,2)", "A(1,1)", "2A_1+2A(0,0)"},
        {"TI.8", "A(1,2)", "A_2+2A(0,0)", "A(1,0)+2A(0,0)"},
        {"TI.9", "A(1,2)", "A_1+A_2", "6A(0,0)"},
        {"TI.10", "A(2,2)", "A(2,1)", "2A_1+3A(0,0)"},
        {"TI.11", "A(2,2)", "A(1,1)+A_1", "A(1,0)+2A_1+3A(0,0)"},
        {"TI.12", "A(2,2)", "A_2+A_2", "9A(0,0)"},
        {"TI.13", "A(0,2)", "A_1+A(0,1)", "A_1+A(0,0)"},
        {"TI.14", "A(0,2)", "A_2", "3A(0,0)"},
        {"TI.15", "A(4,4)", "A(2,4)+A_2", "2D_2+10A(0,0)"},
        {"TI.16", "A(4,4)", "A(4,2)+A_2", "2D_2+10A(0,0)"},
        {"TI.17", "A(4,1)", "A(2,1)+A_2", "2D_2+2A(0,0)"},
        {"TII.1", "B(0,1)", "A_1", "A(0,0)"},
        {"TII.5", "B(2,1)", "A(1,0)+A_1", "3A_1+3A(0,0)"},
        {"TIII.1", "C(2)", "A(1)", "2A(0,0)"},
    };
    for (const Row& row : rows) {
        const std::string id = row.id;
        if (id == "TIII.1") {
            auto& f = r.add(id, id, row.system, "A_1", row.t2);
            f.paper_type1 = row.t1;
            f.reading_note = "label \"A(1)\" read as A_1: a single even root matches nothing else";
            continue;
        }
        r.add(id, id, row.system, row.t1, row.t2);
    }
}

std::vector<Fixture> make_fixtures()
{
    Registry r;
    section_a(r);
    section_b(r);
    section_c(r);
    section_d(r);
    section_exceptional(r);
    tables(r);
    return std::move(r.out);
}


std::string canonical_or_raw(const std::string& type)
{
    try {
        return canonical(type);
    } catch (const std::exception&) {
        return type;
    }
}

struct Counts {
    std::size_t even = 0, odd = 0;
};

Counts counts_of(const ComponentMultiset& t)
{
    Counts c;
    for (const auto& [label, k] : t.entries()) {
        const RootSystem& abs = abstract_system(label);
        c.even += k * abs.count(Parity::even);
        c.odd += k * abs.count(Parity::odd);
    }
    return c;
}

std::string describe(const Counts& c)
{
    return std::to_string(c.even + c.odd) + " roots (" + std::to_string(c.even) + " even, " +
           std::to_string(c.odd) + " odd)";
}

Verdict discrepancy(std::string why) { return {Verdict::Kind::paper_discrepancy, std::move(why)}; }

// Outcome of one attempt at a set of sets with a typing. A malformed attempt (a label
// that does not parse, an entry that is no positive root, a repeated root) is reported
// as invalid with the offending entries.
SplintReport attempt(std::shared_ptr<const RootSystem> target, const FixtureSets& sets, const std::string& t1,
                     const std::string& t2, const VerifyOptions& opts)
{
    SplintReport rep;
    rep.splint.target = target;
    ComponentMultiset m1, m2;
    try {
        m1 = parse_multiset(t1);
        m2 = parse_multiset(t2);
    } catch (const std::exception& e) {
        rep.verdict = {Verdict::Kind::invalid, "type: " + std::string(e.what())};
        return rep;
    }
    rep.splint.type1 = m1;
    rep.splint.type2 = m2;

    std::vector<std::string> bad = sets.out_of_range;
    for (auto& b : bad)
        b += " (coordinate outside " + target->name() + ")";
    std::array<RootMask, 2> masks;
    const std::array<const std::vector<Weight>*, 2> sides{&sets.part1, &sets.part2};
    for (int s = 0; s < 2; ++s)
        for (const Weight& w : *sides[s]) {
            const std::string tag = "side " + std::to_string(s + 1) + ": " + to_string(w);
            auto k = target->index_of(w);
            if (!k)
                bad.push_back(tag + " (not a positive root)");
            else if (masks[s].test(*k))
                bad.push_back(tag + " (listed twice)");
            else
                masks[s].set(*k);
        }
    if (!bad.empty()) {
        std::string detail = "entries: ";
        for (std::size_t i = 0; i < bad.size(); ++i)
            detail += (i ? "; " : "") + bad[i];
        // still report which roots the legal entries miss or share
        const RootMask all = target->all_roots();
        const RootMask missing = all & ~(masks[0] | masks[1]);
        const RootMask both = masks[0] & masks[1];
        auto list = [&](const RootMask& m) {
            std::string out;
            for (std::size_t i : mask_indices(m, target->size()))
                out += (out.empty() ? "" : ", ") + to_string(target->root(i).weight);
            return out;
        };
        if (both.any())
            detail += "; roots in both parts: " + list(both);
        if (missing.any())
            detail += "; roots in neither part: " + list(missing);
        rep.splint.part1 = masks[0];
        rep.splint.part2 = masks[1];
        rep.verdict = {Verdict::Kind::invalid, detail};
        return rep;
    }
    return verify(target, masks[0], m1, masks[1], m2, opts);
}

FixtureCheck check_table_only(const Fixture& f, std::shared_ptr<const RootSystem> target, const VerifyOptions& opts)
{
    FixtureCheck out;
    const ComponentMultiset t1 = parse_multiset(f.type1), t2 = parse_multiset(f.type2);
    if (f.type1 != canonical_or_raw(f.paper_type1) || f.type2 != canonical_or_raw(f.paper_type2))
        out.report.notes.push_back("label reading: " + f.reading_note);
    if (auto found = find_typed_splint(*target, t1, t2, MatchOptions{opts.strict})) {
        out.report = [&] {
            auto rep = verify(target, found->first, t1, found->second, t2, opts);
            rep.notes = out.report.notes;
            return rep;
        }();
        out.report.notes.push_back("realized by exhaustive typed search");
        if (!out.report.verdict.ok())
            out.report.verdict = discrepancy(out.report.verdict.detail);
        return out;
    }

    SplintReport& rep = out.report;
    rep.splint.target = target;
    rep.splint.type1 = t1;
    rep.splint.type2 = t2;
    rep.splint.rank_certificate = {t1.total_rank(opts.rank_rule), t2.total_rank(opts.rank_rule), target->rank()};
    Counts need = counts_of(t1);
    const Counts c2 = counts_of(t2);
    need.even += c2.even;
    need.odd += c2.odd;
    const Counts have{target->count(Parity::even), target->count(Parity::odd)};
    std::string why;
    if (need.even != have.even || need.odd != have.odd)
        why = "size: " + to_string(t1) + " + " + to_string(t2) + " has " + describe(need) + " but " +
              target->name() + " has " + describe(have);
    else
        why = "no partition of the positive roots of " + target->name() + " has type (" + to_string(t1) + ", " +
              to_string(t2) + "); exhaustive typed search";
    for (int s = 0; s < 2; ++s)
        if (rep.splint.rank_certificate[s] > target->rank())
            why += "; rank: effective rank of " + to_string(s ? t2 : t1) + " is " +
                   std::to_string(rep.splint.rank_certificate[s]) + " > " + std::to_string(target->rank());
    rep.verdict = discrepancy(why);
    return out;
}

} // namespace

const std::vector<Fixture>& all_fixtures()
{
    static const std::vector<Fixture> fixtures = make_fixtures();
    return fixtures;
}

const Fixture& fixture(const std::string& id)
{
    for (const Fixture& f : all_fixtures())
        if (f.id == id)
            return f;
    throw std::out_of_range("unknown fixture " + id);
}

FixtureCheck check_fixture(const Fixture& f, const VerifyOptions& opts)
{
    auto target = std::make_shared<const RootSystem>(build_from_spec(f.system));
    if (f.table_only())
        return check_table_only(f, target, opts);

    const bool typed_reading = f.type1 != canonical_or_raw(f.paper_type1) || f.type2 != canonical_or_raw(f.paper_type2);
    FixtureCheck out;
    if (f.printed) {
        SplintReport printed = attempt(target, *f.printed, f.paper_type1, f.paper_type2, opts);
        if (printed.verdict.ok()) {
            out.report = std::move(printed);
            out.report.notes.push_back("printed sets verified as printed");
            return out;
        }
        if (!f.reading && !typed_reading) {
            out.report = std::move(printed);
            out.report.verdict = discrepancy(out.report.verdict.detail);
            return out;
        }
        out.printed_verdict = printed.verdict;
    }

    const FixtureSets& sets = f.reading ? *f.reading : *f.printed;
    out.report = attempt(target, sets, f.type1, f.type2, opts);
    if (out.printed_verdict)
        out.report.notes.push_back("printed: " + to_string(*out.printed_verdict));
    out.report.notes.push_back("reading: " + f.reading_note);
    if (!out.report.verdict.ok())
        out.report.verdict = discrepancy(out.report.verdict.detail);
    return out;
}

FixtureCheck check_fixture(const std::string& id, const VerifyOptions& opts) { return check_fixture(fixture(id), opts); }

const std::vector<TableRow>& table_rows()
{
    static const std::vector<TableRow> rows = [] {
        auto ids = [](const std::string& prefix) {
            std::vector<std::string> out;
            for (const Fixture& f : all_fixtures())
                if (f.id == prefix || f.id.rfind(prefix + ".", 0) == 0)
                    out.push_back(f.id);
            return out;
        };
        auto cat = [](std::vector<std::string> a, const std::vector<std::string>& b) {
            a.insert(a.end(), b.begin(), b.end());
            return a;
        };
        std::vector<TableRow> t = {
            {"I", "A(1,0)", "A_1", "2A(0,0)", ids("TI.1"), ""},
            {"I", "A(0,1)", "A_1", "2A(0,0)", ids("TI.2"), ""},
            {"I", "A(1,1)", "A(1,0)", "A_1+2A(0,0)", {"III.10.m2"}, "instance of the A(m,m) family"},
            {"I", "A(1,1)", "A(0,1)", "A_1+2A(0,0)", {"III.11.m2"}, "instance of the A(m,m) family"},
            {"I", "A(1,1)", "2A_1", "4A(0,0)", ids("TI.5"), ""},
            {"I", "A(1,2)", "A(0,2)", "2A_1+3A(0,0)", ids("TI.6"), ""},
            {"I", "A(1,2)", "A(1,1)", "2A_1+2A(0,0)", ids("TI.7"), ""},
            {"I", "A(1,2)", "A_2+2A(0,0)", "A(1,0)+2A(0,0)", ids("TI.8"), ""},
            {"I", "A(1,2)", "A_1+A_2", "6A(0,0)", ids("TI.9"), ""},
            {"I", "A(2,2)", "A(2,1)", "2A_1+3A(0,0)", ids("TI.10"), ""},
            {"I", "A(2,2)", "A(1,1)+A_1", "A(1,0)+2A_1+3A(0,0)", ids("TI.11"), ""},
            {"I", "A(2,2)", "A_2+A_2", "9A(0,0)", ids("TI.12"), ""},
            {"I", "A(0,2)", "A_1+A(0,1)", "A_1+A(0,0)", ids("TI.13"), ""},
            {"I", "A(0,2)", "A_2", "3A(0,0)", ids("TI.14"), ""},
            {"I", "A(4,4)", "A(2,4)+A_2", "2D_2+10A(0,0)", ids("TI.15"), ""},
            {"I", "A(4,4)", "A(4,2)+A_2", "2D_2+10A(0,0)", ids("TI.16"), ""},
            {"I", "A(4,n)", "A(2,n)+A_2", "2D_2+2nA(0,0)", cat(ids("III.1"), ids("TI.17")), "n=1,2 and the n=1 row"},
            {"I", "A(m-1,n-1)", "A(m-1,0)+A_{n-1}", "(mn-m)A(0,0)", ids("III.2"), ""},
            {"I", "A(m-1,n-1)", "A(0,n-1)+A_{m-1}", "(mn-n)A(0,0)", ids("III.3"), ""},
            {"I", "A(m-1,n-1)", "A(1,n)+A_{m-2}", "...", ids("III.5"), "label read as A(1,n-1)"},
            {"I", "A(m-1,n-1)", "A(m,1)+A_{n-2}", "...", ids("III.6"), "label read as A(m-1,1)"},
            {"I", "A(m-1,n-1)", "...", "...", ids("III.4"), ""},
            {"I", "A(m-1,m-1)", "A(0,m)", "...", ids("III.10"), ""},
            {"I", "A(m-1,m-1)", "A(m,0)", "...", ids("III.11"), ""},
            {"I", "A(m-1,m-1)", "...", "...", ids("III.12"), ""},
            {"I", "A(m-1,n-1)", "...", "...", ids("III.7"), ""},
            {"I", "A(m-1,n-1)", "...", "...", ids("III.9"), ""},
            {"I", "A(m-1,n-1)", "...", "...", ids("III.8"), ""},

            {"II", "B(0,1)", "A_1", "A(0,0)", ids("TII.1"), ""},
            {"II", "B(1,1)", "A(0,1)", "A_1+2A(0,0)", ids("IV.1"), ""},
            {"II", "B(1,2)", "B(0,2)", "A_1+4A(0,0)", ids("IV.2b"), ""},
            {"II", "B(1,2)", "A(0,1)+A_1", "3A_1+4A(0,0)", ids("IV.2a"), ""},
            {"II", "B(2,1)", "A(1,0)+A_1", "3A_1+3A(0,0)", ids("TII.5"), ""},
            {"II", "B(2,2)", "A(1,1)+2A_1", "4A_1+6A(0,0)", ids("IV.3"), ""},
            {"II", "B(0,2)", "A_2", "A_1+2A(0,0)", ids("IV.4a"), ""},
            {"II", "B(0,2)", "2A_1+A(0,0)", "2A_1+A(0,0)", ids("IV.4b"), ""},
            {"II", "B(0,3)", "A_1+B(0,2)", "A_1+A_2+A(0,0)", ids("IV.5"), ""},
            {"II", "B(0,n)", "D_n", "nB(0,1)", ids("IV.6"), ""},
            {"II", "B(0,n)", "C_n", "nA(0,0)", ids("IV.7"), ""},
            {"II", "B(m,n)", "B(0,n)+B_m", "2mnA(0,0)", cat(ids("IV.8"), ids("IV.8alt")),
             "equivalent to B_m+C_n | (2mn+n)A(0,0)"},
            {"II", "B(m,n)", "D(m,n)", "mA_1+nA(0,0)", ids("IV.9"), ""},

            {"III", "C(2)", "A(1)", "2A(0,0)", ids("TIII.1"), "label read as A_1"},
            {"III", "C(3)", "A_2", "C(2)+2A(0,0)", ids("V.2a"), ""},
            {"III", "C(3)", "C(2)+A_1", "C(2)+A_1", ids("V.2b"), ""},
            {"III", "C(4)", "A_1+B_2+2A(0,0)", "A_1+A_2+4A(0,0)", ids("V.3a"), ""},
            {"III", "C(4)", "C(3)+A_1", "D_2+D_2+2A(0,0)", ids("V.3b"), ""},
            {"III", "C(n+1)", "C_n", "2nA(0,0)", ids("V.1"), "instances C(2), C(3), C(5)"},

            {"IV", "D(2,1)", "A(1,0)", "2A_1+2A(0,0)", ids("VI.1"), ""},
            {"IV", "D(2,2)", "A(1,1)", "4A_1+A(0,0)", ids("VI.2"), ""},
            {"IV", "D(3,1)", "A(2,0)", "4A_1+3A(0,0)", ids("VI.3"), ""},
            {"IV", "D(2,3)", "A(1,2)2+A_1", "5A_1+6A(0,0)", ids("VI.5"), "printed label; the item text has A(1,2)+2A_1"},
            {"IV", "D(3,2)", "A(2,1)+A_1", "5A_1+6A(0,0)", ids("VI.4"), ""},
            {"IV", "D(m,n)", "D_m+C{n}", "2mnA(0,0)", ids("VI.7"), "label read as D_m+C_n"},
            {"IV", "D(m,n)", "D(m,n-1)+A_1", "(2n-2)A_1+2mA(0,0)", ids("VI.6a"), ""},
            {"IV", "D(m,n)", "D(m-1,n)", "(2m-2)A_1+2nA(0,0)", ids("VI.6b"), ""},

            {"VII", "G(3)", "A_2+3A(0,0)", "A_2+A_1+4A(0,0)", ids("VII.1a"), ""},
            {"VII", "G(3)", "B_2+A_1+3A(0,0)", "2A_1+4A(0,0)", ids("VII.1b"), ""},
            {"VII", "F(4)", "A_1+B_3", "8A(0,0)", ids("VII.2"), ""},
            {"VII", "D(2,1;a)", "A(1,0)+A_1", "A_1+2A(0,0)", ids("VII.3a"), ""},
            {"VII", "D(2,1;a)", "3A_1", "4A(0,0)", ids("VII.3b"), ""},
        };
        for (auto& row : t) {
            if (row.fixture_ids.empty())
                throw std::logic_error("table row without fixtures: " + row.system + " " + row.type1);
            // parametric typings are shown at their first instance
            const Fixture& first = fixture(row.fixture_ids.front());
            if (row.type1 == "..." || row.type2 == "...") {
                row.type1 = first.paper_type1;
                row.type2 = first.paper_type2;
                row.note = "typing shown at " + first.id + (row.note.empty() ? "" : "; " + row.note);
            }
        }
        return t;
    }();
    return rows;
}

Manifest load_manifest(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open manifest " + path);
    const nlohmann::json j = nlohmann::json::parse(in);
    Manifest m;
    for (const auto& [id, why] : j.at("expected_discrepancies").items())
        m.expected_discrepancies[id] = why.get<std::string>();
    return m;
}

std::string default_fixture_dir() { return SPLINTKIT_FIXTURE_DIR; }

} // namespace splintkit
