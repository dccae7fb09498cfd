#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "discpot/rational.hpp"

namespace discpot {

struct SeriesError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exponent vector, laid out as [small exponents..., phase exponents...].
using ExpVec = std::vector<int>;

// Names the variables of a series ring.  "Small" variables (Kahler
// parameters and the product uv) carry nonnegative exponents and are
// truncated by total degree; "phase" variables (the z_i) are Laurent
// variables truncated in a symmetric window.
struct VariableSpec {
    std::vector<std::string> small_names;
    std::vector<std::string> phase_names;

    VariableSpec() = default;
    VariableSpec(std::vector<std::string> smalls, std::vector<std::string> phases);

    int num_small() const { return static_cast<int>(small_names.size()); }
    int num_phase() const { return static_cast<int>(phase_names.size()); }
    int arity() const { return num_small() + num_phase(); }

    // Index into an ExpVec; throws SeriesError for unknown names.
    int index_of(const std::string& name) const;
    bool has(const std::string& name) const;
    bool is_small_index(int idx) const { return idx < num_small(); }
    const std::string& name_of(int idx) const;

    bool operator==(const VariableSpec&) const = default;
};

struct Truncation {
    int small_total_max = 0;
    int z_window = 0;
    // Optional per-variable caps on small exponents, keyed by name.
    std::map<std::string, int> per_small_max;

    bool keeps(const ExpVec& e, const VariableSpec& spec) const;
    bool operator==(const Truncation&) const = default;
};

// Sparse multivariate truncated power/Laurent series over exact rationals.
// Immutable after construction; all operations are pure functions.  Two
// series are equal iff specs, truncations and term maps agree; zero
// coefficients are never stored.
class TruncatedSeries {
  public:
    using TermMap = std::map<ExpVec, Rational>;

    TruncatedSeries(VariableSpec spec, Truncation trunc)
        : spec_(std::move(spec)), trunc_(std::move(trunc)) {}

    static TruncatedSeries zero(const VariableSpec& spec, const Truncation& trunc);
    static TruncatedSeries constant(const VariableSpec& spec, const Truncation& trunc,
                                    const Rational& c);
    static TruncatedSeries monomial(const VariableSpec& spec, const Truncation& trunc,
                                    const ExpVec& e, const Rational& c);
    // Convenience: the variable `name` to the first power.
    static TruncatedSeries variable(const VariableSpec& spec, const Truncation& trunc,
                                    const std::string& name);

    const VariableSpec& spec() const { return spec_; }
    const Truncation& trunc() const { return trunc_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    Rational constant_term() const;
    Rational coeff(const ExpVec& e) const;
    Rational coeff_named(const std::map<std::string, int>& pattern) const;

    // Adds c * x^e, dropping the term if it violates the truncation and
    // erasing the entry when the sum cancels.
    void add_term(const ExpVec& e, const Rational& c);

    TruncatedSeries operator-() const;
    TruncatedSeries operator+(const TruncatedSeries& rhs) const;
    TruncatedSeries operator-(const TruncatedSeries& rhs) const;
    TruncatedSeries operator*(const TruncatedSeries& rhs) const;
    TruncatedSeries operator*(const Rational& c) const;
    bool operator==(const TruncatedSeries& rhs) const = default;

    // Re-truncates to a (typically smaller) truncation.
    TruncatedSeries restricted(const Truncation& t) const;
    // Maps this series into a superset spec (matching variables by name).
    TruncatedSeries embedded(const VariableSpec& spec, const Truncation& trunc) const;
    // Removes a variable that must not occur with nonzero exponent.
    TruncatedSeries without_variable(const std::string& name) const;

    // Termwise d/dvar and termwise antiderivative (integration constant 0).
    // The antiderivative throws when an exponent -1 term is present.
    TruncatedSeries derivative(const std::string& var) const;
    TruncatedSeries antiderivative(const std::string& var) const;

    // Canonical text form: one `num/den  e1 e2 ... ek` line per term,
    // variables in spec order, sorted lexicographically by exponent vector.
    std::string to_text() const;
    // Human-readable single-line form, e.g. "1 - 2*q + 5*q^2".
    std::string to_pretty() const;

  private:
    VariableSpec spec_;
    Truncation trunc_;
    TermMap terms_;
};

// Multiplication kernels.  mul_serial is the reference; mul_parallel
// splits the left factor across OpenMP threads and merges the exact
// partial sums, so its result is bit-identical to the serial one.
TruncatedSeries mul_serial(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul_parallel(const TruncatedSeries& a, const TruncatedSeries& b);

// Multiplicative inverse via a geometric series in (a/c - 1).  Requires a
// nonzero constant term and an admissible tail: every non-constant
// monomial has small total degree > 0, or has all phase exponents >= 0
// with at least one positive (the z >= 0 expansion region).
TruncatedSeries invert(const TruncatedSeries& a);

// exp(a) = sum a^k/k!; requires constant term 0 and admissible tail.
TruncatedSeries exp_series(const TruncatedSeries& a);
// log(a) for constant term 1 and admissible tail.
TruncatedSeries log_series(const TruncatedSeries& a);

// Integer power, negative exponents via invert.
TruncatedSeries pow_series(const TruncatedSeries& a, int e);

// Exact composition: bound phase variables must be invertible wherever
// negative powers occur, bound small variables must have zero constant
// term.  Unbound variables pass through.  All bindings live in the result
// ring (same spec/truncation).
TruncatedSeries substitute(const TruncatedSeries& a,
                           const std::map<std::string, TruncatedSeries>& bindings);

// Coefficient extraction: fixes exponents of a subset of variables and
// returns the coefficient as a series in the remaining variables, or a
// Rational when every variable is fixed.
std::variant<TruncatedSeries, Rational> extract(const TruncatedSeries& a,
                                                const std::map<std::string, int>& pattern);

// Runtime switch for the OpenMP kernel (on by default); the serial
// reference stays available for tests and benchmarks either way.
void set_parallel_mul(bool enabled);
bool parallel_mul_enabled();

}  // namespace discpot
