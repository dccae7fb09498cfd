#include "discpot/series.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>

namespace discpot {

namespace {

std::atomic<bool> g_parallel_mul{true};

// Iteration cap for the geometric/exponential loops; admissible tails
// provably die out long before this at any sane truncation.
constexpr int kMaxSeriesIterations = 100000;

[[noreturn]] void fail(const std::string& msg) { throw SeriesError(msg); }

}  // namespace

void set_parallel_mul(bool enabled) { g_parallel_mul = enabled; }
bool parallel_mul_enabled() { return g_parallel_mul; }

VariableSpec::VariableSpec(std::vector<std::string> smalls, std::vector<std::string> phases)
    : small_names(std::move(smalls)), phase_names(std::move(phases)) {
    std::set<std::string> seen;
    for (const auto& n : small_names)
        if (!seen.insert(n).second) fail("duplicate variable name: " + n);
    for (const auto& n : phase_names)
        if (!seen.insert(n).second) fail("duplicate variable name: " + n);
}

int VariableSpec::index_of(const std::string& name) const {
    for (int i = 0; i < num_small(); ++i)
        if (small_names[i] == name) return i;
    for (int i = 0; i < num_phase(); ++i)
        if (phase_names[i] == name) return num_small() + i;
    fail("unknown variable name: " + name);
}

bool VariableSpec::has(const std::string& name) const {
    return std::find(small_names.begin(), small_names.end(), name) != small_names.end() ||
           std::find(phase_names.begin(), phase_names.end(), name) != phase_names.end();
}

const std::string& VariableSpec::name_of(int idx) const {
    return idx < num_small() ? small_names[idx] : phase_names[idx - num_small()];
}

bool Truncation::keeps(const ExpVec& e, const VariableSpec& spec) const {
    const int ns = spec.num_small();
    long total = 0;
    for (int i = 0; i < ns; ++i) {
        if (e[i] < 0) return false;
        total += e[i];
    }
    if (total > small_total_max) return false;
    for (const auto& [name, cap] : per_small_max) {
        if (e[spec.index_of(name)] > cap) return false;
    }
    for (int i = ns; i < spec.arity(); ++i) {
        if (e[i] > z_window || e[i] < -z_window) return false;
    }
    return true;
}

TruncatedSeries TruncatedSeries::zero(const VariableSpec& spec, const Truncation& trunc) {
    return TruncatedSeries(spec, trunc);
}

TruncatedSeries TruncatedSeries::constant(const VariableSpec& spec, const Truncation& trunc,
                                          const Rational& c) {
    TruncatedSeries s(spec, trunc);
    s.add_term(ExpVec(spec.arity(), 0), c);
    return s;
}

TruncatedSeries TruncatedSeries::monomial(const VariableSpec& spec, const Truncation& trunc,
                                          const ExpVec& e, const Rational& c) {
    if (static_cast<int>(e.size()) != spec.arity()) fail("monomial exponent arity mismatch");
    TruncatedSeries s(spec, trunc);
    s.add_term(e, c);
    return s;
}

TruncatedSeries TruncatedSeries::variable(const VariableSpec& spec, const Truncation& trunc,
                                          const std::string& name) {
    ExpVec e(spec.arity(), 0);
    e[spec.index_of(name)] = 1;
    return monomial(spec, trunc, e, 1);
}

Rational TruncatedSeries::constant_term() const { return coeff(ExpVec(spec_.arity(), 0)); }

Rational TruncatedSeries::coeff(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational TruncatedSeries::coeff_named(const std::map<std::string, int>& pattern) const {
    ExpVec e(spec_.arity(), 0);
    for (const auto& [name, exp] : pattern) e[spec_.index_of(name)] = exp;
    return coeff(e);
}

void TruncatedSeries::add_term(const ExpVec& e, const Rational& c) {
    if (c == 0) return;
    if (!trunc_.keeps(e, spec_)) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

namespace {

void require_same_ring(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.spec() != b.spec()) fail("variable spec mismatch");
    if (a.trunc() != b.trunc()) fail("truncation mismatch");
}

}  // namespace

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries r(spec_, trunc_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& rhs) const {
    require_same_ring(*this, rhs);
    TruncatedSeries r = *this;
    for (const auto& [e, c] : rhs.terms_) r.add_term(e, c);
    return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& rhs) const {
    require_same_ring(*this, rhs);
    TruncatedSeries r = *this;
    for (const auto& [e, c] : rhs.terms_) r.add_term(e, -c);
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const Rational& c) const {
    TruncatedSeries r(spec_, trunc_);
    if (c == 0) return r;
    for (const auto& [e, t] : terms_) r.terms_.emplace(e, t * c);
    return r;
}

TruncatedSeries mul_serial(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_ring(a, b);
    TruncatedSeries r(a.spec(), a.trunc());
    ExpVec e(a.spec().arity());
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

TruncatedSeries mul_parallel(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_ring(a, b);
#ifdef _OPENMP
    std::vector<const std::pair<const ExpVec, Rational>*> rows;
    rows.reserve(a.terms().size());
    for (const auto& t : a.terms()) rows.push_back(&t);

    const int nthreads = std::max(1, omp_get_max_threads());
    std::vector<TruncatedSeries> partial(nthreads, TruncatedSeries(a.spec(), a.trunc()));

#pragma omp parallel num_threads(nthreads)
    {
        const int tid = omp_get_thread_num();
        TruncatedSeries& local = partial[tid];
        ExpVec e(a.spec().arity());
#pragma omp for schedule(static)
        for (long idx = 0; idx < static_cast<long>(rows.size()); ++idx) {
            const auto& [ea, ca] = *rows[idx];
            for (const auto& [eb, cb] : b.terms()) {
                for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                local.add_term(e, ca * cb);
            }
        }
    }

    // Exact rational addition is order-independent, so merging the
    // per-thread maps reproduces the serial result bit for bit.
    TruncatedSeries r(a.spec(), a.trunc());
    for (auto& p : partial)
        for (const auto& [e2, c] : p.terms()) r.add_term(e2, c);
    return r;
#else
    return mul_serial(a, b);
#endif
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& rhs) const {
    const size_t work = terms_.size() * rhs.terms_.size();
    if (g_parallel_mul && work >= 4096) return mul_parallel(*this, rhs);
    return mul_serial(*this, rhs);
}

TruncatedSeries TruncatedSeries::restricted(const Truncation& t) const {
    TruncatedSeries r(spec_, t);
    for (const auto& [e, c] : terms_) r.add_term(e, c);
    return r;
}

TruncatedSeries TruncatedSeries::embedded(const VariableSpec& spec, const Truncation& trunc) const {
    std::vector<int> where(spec_.arity());
    for (int i = 0; i < spec_.arity(); ++i) {
        const std::string& name = spec_.name_of(i);
        int j = spec.index_of(name);
        if (spec_.is_small_index(i) != spec.is_small_index(j))
            fail("variable " + name + " changes class under embedding");
        where[i] = j;
    }
    TruncatedSeries r(spec, trunc);
    ExpVec e(spec.arity());
    for (const auto& [src, c] : terms_) {
        std::fill(e.begin(), e.end(), 0);
        for (int i = 0; i < spec_.arity(); ++i) e[where[i]] = src[i];
        r.add_term(e, c);
    }
    return r;
}

TruncatedSeries TruncatedSeries::without_variable(const std::string& name) const {
    const int idx = spec_.index_of(name);
    for (const auto& [e, c] : terms_)
        if (e[idx] != 0) fail("variable " + name + " occurs with nonzero exponent");
    VariableSpec reduced;
    for (int i = 0; i < spec_.num_small(); ++i)
        if (spec_.small_names[i] != name) reduced.small_names.push_back(spec_.small_names[i]);
    for (int i = 0; i < spec_.num_phase(); ++i)
        if (spec_.phase_names[i] != name) reduced.phase_names.push_back(spec_.phase_names[i]);
    Truncation t = trunc_;
    t.per_small_max.erase(name);
    TruncatedSeries r(reduced, t);
    ExpVec e;
    for (const auto& [src, c] : terms_) {
        e.clear();
        for (int i = 0; i < spec_.arity(); ++i)
            if (i != idx) e.push_back(src[i]);
        r.add_term(e, c);
    }
    return r;
}

TruncatedSeries TruncatedSeries::derivative(const std::string& var) const {
    const int idx = spec_.index_of(var);
    TruncatedSeries r(spec_, trunc_);
    for (const auto& [e, c] : terms_) {
        if (e[idx] == 0) continue;
        ExpVec d = e;
        d[idx] -= 1;
        r.add_term(d, c * e[idx]);
    }
    return r;
}

TruncatedSeries TruncatedSeries::antiderivative(const std::string& var) const {
    const int idx = spec_.index_of(var);
    TruncatedSeries r(spec_, trunc_);
    for (const auto& [e, c] : terms_) {
        if (e[idx] == -1)
            fail("logarithmic term: exponent -1 in " + var + " cannot be integrated");
        ExpVec d = e;
        d[idx] += 1;
        r.add_term(d, c / d[idx]);
    }
    return r;
}

std::string TruncatedSeries::to_text() const {
    std::ostringstream out;
    for (const auto& [e, c] : terms_) {
        out << c.get_num() << '/' << c.get_den() << ' ';
        for (size_t i = 0; i < e.size(); ++i) out << ' ' << e[i];
        out << '\n';
    }
    return out.str();
}

std::string TruncatedSeries::to_pretty() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        std::string mono;
        for (int i = 0; i < spec_.arity(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += spec_.name_of(i);
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            out << a;
        } else if (a == 1) {
            out << mono;
        } else {
            out << a << "*" << mono;
        }
    }
    return out.str();
}

namespace {

// The z >= 0 expansion region: a tail monomial may be inverted/expanded
// against iff it carries positive small degree, or is a pure nonnegative
// phase monomial.  A pure z^{-1}-type term signals that the series is
// being used outside its expansion region.
bool admissible_tail_monomial(const ExpVec& e, const VariableSpec& spec) {
    long small = 0;
    for (int i = 0; i < spec.num_small(); ++i) small += e[i];
    if (small > 0) return true;
    bool positive = false;
    for (int i = spec.num_small(); i < spec.arity(); ++i) {
        if (e[i] < 0) return false;
        if (e[i] > 0) positive = true;
    }
    return positive;
}

void require_admissible_tail(const TruncatedSeries& s, const char* who) {
    const ExpVec origin(s.spec().arity(), 0);
    for (const auto& [e, c] : s.terms()) {
        if (e == origin) continue;
        if (!admissible_tail_monomial(e, s.spec()))
            fail(std::string(who) + ": inadmissible tail monomial (expansion-region violation)");
    }
}

}  // namespace

TruncatedSeries invert(const TruncatedSeries& a) {
    const Rational c = a.constant_term();
    if (c == 0) fail("invert: constant term is zero");
    TruncatedSeries s = a * (Rational(1) / c);
    s.add_term(ExpVec(a.spec().arity(), 0), -1);  // s = a/c - 1
    require_admissible_tail(s, "invert");
    TruncatedSeries neg_s = -s;
    TruncatedSeries r = TruncatedSeries::constant(a.spec(), a.trunc(), 1);
    TruncatedSeries t = r;
    for (int k = 0; k < kMaxSeriesIterations; ++k) {
        t = t * neg_s;
        if (t.is_zero()) return r * (Rational(1) / c);
        r = r + t;
    }
    fail("invert: series iteration failed to terminate");
}

TruncatedSeries exp_series(const TruncatedSeries& a) {
    if (a.constant_term() != 0) fail("exp: constant term must be zero");
    require_admissible_tail(a, "exp");
    TruncatedSeries r = TruncatedSeries::constant(a.spec(), a.trunc(), 1);
    TruncatedSeries t = r;
    for (int k = 1; k < kMaxSeriesIterations; ++k) {
        t = t * a * Rational(1, k);
        if (t.is_zero()) return r;
        r = r + t;
    }
    fail("exp: series iteration failed to terminate");
}

TruncatedSeries log_series(const TruncatedSeries& a) {
    if (a.constant_term() != 1) fail("log: constant term must be one");
    require_admissible_tail(a, "log");
    TruncatedSeries s = a;
    s.add_term(ExpVec(a.spec().arity(), 0), -1);
    TruncatedSeries r = TruncatedSeries::zero(a.spec(), a.trunc());
    TruncatedSeries t = TruncatedSeries::constant(a.spec(), a.trunc(), 1);
    for (int k = 1; k < kMaxSeriesIterations; ++k) {
        t = t * s;
        if (t.is_zero()) return r;
        r = r + t * Rational((k % 2) ? 1 : -1, k);
    }
    fail("log: series iteration failed to terminate");
}

TruncatedSeries pow_series(const TruncatedSeries& a, int e) {
    if (e == 0) return TruncatedSeries::constant(a.spec(), a.trunc(), 1);
    TruncatedSeries base = e > 0 ? a : invert(a);
    int n = e > 0 ? e : -e;
    TruncatedSeries r = base;
    for (int i = 1; i < n; ++i) r = r * base;
    return r;
}

TruncatedSeries substitute(const TruncatedSeries& a,
                           const std::map<std::string, TruncatedSeries>& bindings) {
    const VariableSpec& spec = a.spec();
    std::vector<std::optional<int>> bound(spec.arity());
    for (const auto& [name, value] : bindings) {
        int idx = spec.index_of(name);
        require_same_ring(a, value);
        if (spec.is_small_index(idx) && value.constant_term() != 0)
            fail("substitute: small variable " + name + " bound to series with nonzero constant term");
        bound[idx] = 0;  // marker
    }
    if (bindings.empty()) return a;

    // Powers of each binding, computed on demand.
    std::map<std::string, std::map<int, TruncatedSeries>> powers;
    auto power_of = [&](const std::string& name, int e) -> const TruncatedSeries& {
        auto& cache = powers[name];
        auto it = cache.find(e);
        if (it != cache.end()) return it->second;
        const TruncatedSeries& base = bindings.at(name);
        TruncatedSeries p = pow_series(base, e);
        return cache.emplace(e, std::move(p)).first->second;
    };

    TruncatedSeries r = TruncatedSeries::zero(spec, a.trunc());
    for (const auto& [e, c] : a.terms()) {
        ExpVec pass = e;
        std::vector<std::pair<std::string, int>> todo;
        for (int i = 0; i < spec.arity(); ++i) {
            if (bound[i] && e[i] != 0) {
                todo.emplace_back(spec.name_of(i), e[i]);
                pass[i] = 0;
            }
        }
        TruncatedSeries term = TruncatedSeries::monomial(spec, a.trunc(), pass, c);
        for (const auto& [name, exp] : todo) term = term * power_of(name, exp);
        r = r + term;
    }
    return r;
}

std::variant<TruncatedSeries, Rational> extract(const TruncatedSeries& a,
                                                const std::map<std::string, int>& pattern) {
    const VariableSpec& spec = a.spec();
    std::vector<std::optional<int>> fixed(spec.arity());
    for (const auto& [name, exp] : pattern) fixed[spec.index_of(name)] = exp;

    VariableSpec reduced;
    for (int i = 0; i < spec.num_small(); ++i)
        if (!fixed[i]) reduced.small_names.push_back(spec.small_names[i]);
    for (int i = spec.num_small(); i < spec.arity(); ++i)
        if (!fixed[i]) reduced.phase_names.push_back(spec.phase_names[i - spec.num_small()]);

    if (reduced.arity() == 0) {
        ExpVec e(spec.arity());
        for (int i = 0; i < spec.arity(); ++i) e[i] = *fixed[i];
        return a.coeff(e);
    }

    Truncation t = a.trunc();
    for (const auto& [name, exp] : pattern) t.per_small_max.erase(name);
    TruncatedSeries r(reduced, t);
    ExpVec e;
    for (const auto& [src, c] : a.terms()) {
        bool match = true;
        for (int i = 0; i < spec.arity() && match; ++i)
            if (fixed[i] && src[i] != *fixed[i]) match = false;
        if (!match) continue;
        e.clear();
        for (int i = 0; i < spec.arity(); ++i)
            if (!fixed[i]) e.push_back(src[i]);
        r.add_term(e, c);
    }
    return r;
}

}  // namespace discpot
