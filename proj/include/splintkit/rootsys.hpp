#pragma once

#include <bitset>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "splintkit/rational.hpp"

namespace splintkit {

/// Upper bound on |positive roots| of any system handled by the library.
inline constexpr std::size_t kMaxRoots = 192;

/// Set of positive roots of one system, by index into RootSystem::roots().
using RootMask = std::bitset<kMaxRoots>;

/// Raised when family parameters fall outside their domain.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a search or group generation exceeds a configured cap.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Parity { even, odd };

inline Parity operator^(Parity a, Parity b) { return a == b ? Parity::even : Parity::odd; }
const char* to_string(Parity p);

/// Coefficient vector over the (eps_1..eps_m | delta_1..delta_n) basis.
struct Weight {
    std::vector<Rational> eps;
    std::vector<Rational> delta;

    Weight() = default;
    Weight(std::size_t m, std::size_t n) : eps(m), delta(n) {}
    Weight(std::vector<Rational> e, std::vector<Rational> d) : eps(std::move(e)), delta(std::move(d)) {}

    std::size_t dim() const { return eps.size() + delta.size(); }
    bool is_zero() const;
    const Rational& operator[](std::size_t i) const { return i < eps.size() ? eps[i] : delta[i - eps.size()]; }
    Rational& operator[](std::size_t i) { return i < eps.size() ? eps[i] : delta[i - eps.size()]; }

    Weight& operator+=(const Weight& o);
    Weight& operator-=(const Weight& o);
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    Weight operator-() const;
    friend Weight operator*(const Rational& s, Weight w);
    friend bool operator==(const Weight&, const Weight&) = default;
    friend bool operator<(const Weight& a, const Weight& b);
};

/// Text form in ASCII eps/delta notation: "e1-e2", "d1+e2", "2d1", "1/2(e1+e2+e3+d)".
std::string to_string(const Weight& w);

struct Root {
    Weight weight;
    Parity parity = Parity::even;

    friend bool operator==(const Root&, const Root&) = default;
};

/// Canonical root order: parity (even first), then eps coefficients, then delta coefficients.
bool root_less(const Root& a, const Root& b);

/// Symmetric Gram matrix over the concatenated (eps|delta) basis.
class BilinearForm {
public:
    BilinearForm() = default;
    explicit BilinearForm(std::size_t dim) : dim_(dim), gram_(dim * dim) {}

    std::size_t dim() const { return dim_; }
    const FormValue& at(std::size_t i, std::size_t j) const { return gram_[i * dim_ + j]; }
    void set(std::size_t i, std::size_t j, FormValue v);

    FormValue pair(const Weight& a, const Weight& b) const;
    friend bool operator==(const BilinearForm&, const BilinearForm&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<FormValue> gram_;
};

enum class Family {
    A,     // A(m,n)
    B,     // B(m,n), including B(0,n)
    C,     // C(n+1)
    D,     // D(m,n)
    G3,    // G(3)
    F4,    // F(4)
    D21a,  // D(2,1;alpha)
    An, Bn, Cn, Dn, G2  // even-only
};

const char* family_token(Family f);
std::optional<Family> family_from_token(const std::string& token);
bool is_even_family(Family f);

/// Immutable positive root system with addition table.
///
/// Label parameters follow the conventional names: A(p,q) has p+1 eps and q+1 delta
/// coordinates, B(p,q) and D(p,q) have p eps and q delta, C(p) has one eps and p-1
/// delta; even families X_p use p as the usual rank index. G(3) stores its eps part in
/// the reduced basis (eps_1, eps_2) with eps_3 = -eps_1 - eps_2.
class RootSystem {
public:
    struct Data {
        Family family = Family::A;
        int p = 0;
        int q = 0;
        std::vector<Root> roots;
        BilinearForm form;
        int rank = 0;
        std::size_t eps_dim = 0;
        std::size_t delta_dim = 0;
        std::vector<Weight> simple_roots;  // only for G(3), F(4), D(2,1;alpha)
        bool delta_sign_flipped = false;
    };

    explicit RootSystem(Data data);

    Family family() const { return d_.family; }
    int p() const { return d_.p; }
    int q() const { return d_.q; }
    const std::string& name() const { return name_; }
    int rank() const { return d_.rank; }
    std::size_t size() const { return d_.roots.size(); }
    std::size_t eps_dim() const { return d_.eps_dim; }
    std::size_t delta_dim() const { return d_.delta_dim; }
    std::size_t dim() const { return d_.eps_dim + d_.delta_dim; }
    const std::vector<Root>& roots() const { return d_.roots; }
    const Root& root(std::size_t i) const { return d_.roots[i]; }
    Parity parity(std::size_t i) const { return d_.roots[i].parity; }
    const BilinearForm& form() const { return d_.form; }
    const std::vector<Weight>& simple_roots() const { return d_.simple_roots; }
    bool delta_sign_flipped() const { return d_.delta_sign_flipped; }
    const Data& data() const { return d_; }

    /// Index of the positive root with this weight, if any.
    std::optional<std::size_t> index_of(const Weight& w) const;
    /// Index of the root i + j if it is a positive root, else -1.
    int sum_index(std::size_t i, std::size_t j) const { return sums_[i * size() + j]; }

    RootMask all_roots() const;
    RootMask roots_of_parity(Parity p) const;
    std::size_t count(Parity p) const;

    /// Weight with the given coefficients over the stored simple roots.
    Weight from_simple_coordinates(const std::vector<Rational>& coeffs) const;

    friend bool operator==(const RootSystem& a, const RootSystem& b);

private:
    std::string weight_key(const Weight& w) const;

    Data d_;
    std::string name_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<int> sums_;
};

std::string system_name(Family f, int p, int q);

/// Positive root system of a family. Throws ParameterError naming the violated
/// constraint. For A(m,n) the delta block defaults to +delta_kl; flip_delta_sign
/// selects -delta_kl.
RootSystem build(Family family, int p = 0, int q = 0, bool flip_delta_sign = false);

/// Parse "A(2,1)", "B(0,3)", "C(4)", "D(2,1)", "D(2,1;a)", "G(3)", "F(4)", "A_3", "G_2".
/// Throws ParameterError on malformed text.
RootSystem build_from_spec(const std::string& spec);

/// (a,b) under the system's form. Throws std::invalid_argument on dimension mismatch.
FormValue pairing(const RootSystem& rs, const Weight& a, const Weight& b);

/// The positive root a + b, if it exists.
std::optional<Root> find_sum(const RootSystem& rs, const Root& a, const Root& b);

/// Closed-form |positive roots| used as the construction oracle.
std::size_t expected_root_count(Family family, int p, int q);

/// Roots listed in a mask, in index order.
std::vector<std::size_t> mask_indices(const RootMask& m, std::size_t n);
RootMask mask_from_indices(const std::vector<std::size_t>& idx);

/// Index list of roots with the given weights; throws std::invalid_argument when a
/// weight is not a positive root.
RootMask mask_from_weights(const RootSystem& rs, const std::vector<Weight>& ws);

} // namespace splintkit
