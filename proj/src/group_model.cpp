#include "gkgraph/group_model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gkgraph/digraph_engine.hpp"

namespace gk {

namespace {

using u128 = unsigned __int128;

long long mod_pow(long long base, long long exp, long long mod) {
    long long r = 1 % mod;
    base %= mod;
    while (exp) {
        if (exp & 1) r = static_cast<long long>(static_cast<u128>(r) * base % mod);
        base = static_cast<long long>(static_cast<u128>(base) * base % mod);
        exp >>= 1;
    }
    return r;
}

long long mod_inverse(long long a, long long p) { return mod_pow(a, p - 2, p); }

long long smallest_primitive_root(long long p) {
    std::vector<long long> prime_factors;
    long long phi = p - 1, n = phi;
    for (long long f = 2; f * f <= n; ++f)
        if (n % f == 0) {
            prime_factors.push_back(f);
            while (n % f == 0) n /= f;
        }
    if (n > 1) prime_factors.push_back(n);
    for (long long g = 2; g < p; ++g) {
        bool ok = true;
        for (long long f : prime_factors)
            if (mod_pow(g, phi / f, p) == 1) { ok = false; break; }
        if (ok) return g;
    }
    throw ValidationError("no primitive root mod " + std::to_string(p));
}

// Remainder of a mod b over F_q[x], coefficients low degree first.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b, long long q) {
    while (a.size() >= b.size()) {
        long long lead = a.back();
        if (lead == 0) { a.pop_back(); continue; }
        long long inv_lead_b = mod_inverse(b.back(), q);
        long long factor = lead * inv_lead_b % q;
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            long long v = a[shift + i] - factor * b[i] % q;
            a[shift + i] = static_cast<int>(((v % q) + q) % q);
        }
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

bool is_zero_poly(const std::vector<int>& a) {
    for (int c : a)
        if (c != 0) return false;
    return true;
}

} // namespace

bool polynomial_is_irreducible(Vertex q, const std::vector<int>& poly) {
    if (poly.size() < 2 || poly.back() == 0) return false;
    int d = static_cast<int>(poly.size()) - 1;
    if (d == 1) return true;
    // Trial division by every monic polynomial of degree 1..d/2; a composite
    // has a monic irreducible factor in that range.
    for (int fd = 1; fd <= d / 2; ++fd) {
        unsigned long long count = 1;
        for (int i = 0; i < fd; ++i) count *= static_cast<unsigned long long>(q);
        for (unsigned long long idx = 0; idx < count; ++idx) {
            std::vector<int> f(fd + 1, 0);
            unsigned long long t = idx;
            for (int i = 0; i < fd; ++i) {
                f[i] = static_cast<int>(t % q);
                t /= q;
            }
            f[fd] = 1;
            if (is_zero_poly(poly_mod(poly, f, q))) return false;
        }
    }
    return true;
}

FiniteField::FiniteField(Vertex q, int d) {
    if (q <= 1 || !is_prime(static_cast<unsigned long long>(q)) || d < 1)
        throw ValidationError("field needs a prime characteristic and positive degree");
    spec_.q = q;
    spec_.d = d;
    order_ = 1;
    for (int i = 0; i < d; ++i) order_ *= static_cast<unsigned long long>(q);
    unsigned long long count = order_;
    for (unsigned long long idx = 0; idx < count; ++idx) {
        std::vector<int> m(d + 1, 0);
        unsigned long long t = idx;
        for (int i = 0; i < d; ++i) {
            m[i] = static_cast<int>(t % q);
            t /= q;
        }
        m[d] = 1;
        if (polynomial_is_irreducible(q, m)) {
            spec_.modulus = m;
            return;
        }
    }
    throw ValidationError("no irreducible polynomial found"); // unreachable
}

FiniteField::FiniteField(const FiniteFieldSpec& spec) : spec_(spec) {
    if (static_cast<int>(spec.modulus.size()) != spec.d + 1 || spec.modulus.back() != 1)
        throw ValidationError("modulus must be monic of the stated degree");
    if (!polynomial_is_irreducible(spec.q, spec.modulus))
        throw ValidationError("modulus is reducible");
    order_ = 1;
    for (int i = 0; i < spec.d; ++i) order_ *= static_cast<unsigned long long>(spec.q);
}

FqElem FiniteField::zero() const { return FqElem(spec_.d, 0); }

FqElem FiniteField::one() const {
    FqElem e(spec_.d, 0);
    e[0] = 1;
    return e;
}

FqElem FiniteField::element_at(unsigned long long index) const {
    FqElem e(spec_.d, 0);
    for (int i = 0; i < spec_.d; ++i) {
        e[i] = static_cast<int>(index % spec_.q);
        index /= spec_.q;
    }
    return e;
}

unsigned long long FiniteField::index_of(const FqElem& x) const {
    unsigned long long idx = 0;
    for (int i = spec_.d - 1; i >= 0; --i)
        idx = idx * static_cast<unsigned long long>(spec_.q) +
              static_cast<unsigned long long>(x[i]);
    return idx;
}

FqElem FiniteField::add(const FqElem& a, const FqElem& b) const {
    FqElem r(spec_.d);
    for (int i = 0; i < spec_.d; ++i) r[i] = static_cast<int>((a[i] + b[i]) % spec_.q);
    return r;
}

FqElem FiniteField::neg(const FqElem& a) const {
    FqElem r(spec_.d);
    for (int i = 0; i < spec_.d; ++i) r[i] = static_cast<int>((spec_.q - a[i]) % spec_.q);
    return r;
}

FqElem FiniteField::mul(const FqElem& a, const FqElem& b) const {
    std::vector<int> prod(2 * spec_.d - 1, 0);
    for (int i = 0; i < spec_.d; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < spec_.d; ++j)
            prod[i + j] = static_cast<int>((prod[i + j] +
                                            static_cast<long long>(a[i]) * b[j]) % spec_.q);
    }
    auto rem = poly_mod(prod, spec_.modulus, spec_.q);
    rem.resize(spec_.d, 0);
    return rem;
}

FqElem FiniteField::pow(const FqElem& a, unsigned long long e) const {
    FqElem r = one(), base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

bool FiniteField::is_zero(const FqElem& a) const { return is_zero_poly(a); }

bool FiniteField::is_one(const FqElem& a) const {
    if (a[0] != 1) return false;
    for (int i = 1; i < spec_.d; ++i)
        if (a[i] != 0) return false;
    return true;
}

unsigned long long FiniteField::multiplicative_order(const FqElem& a) const {
    if (is_zero(a)) throw ValidationError("zero has no multiplicative order");
    FqElem x = a;
    unsigned long long n = 1;
    while (!is_one(x)) {
        x = mul(x, a);
        ++n;
    }
    return n;
}

FqElem FiniteField::element_of_order(Vertex p) const {
    unsigned long long group = order_ - 1;
    if (p <= 0 || group % static_cast<unsigned long long>(p) != 0)
        throw ValidationError(std::to_string(p) + " does not divide the unit group order");
    unsigned long long k = group / static_cast<unsigned long long>(p);
    for (unsigned long long idx = 1; idx < order_; ++idx) {
        FqElem y = pow(element_at(idx), k);
        if (!is_one(y)) return y;
    }
    throw ValidationError("no element of order " + std::to_string(p)); // unreachable
}

int frobenius_degree(Vertex p, Vertex q) {
    long long r = 1;
    for (int d = 1; d < p; ++d) {
        r = r * q % p;
        if (r == 1) return d;
    }
    return static_cast<int>(p - 1); // Fermat's little theorem
}

FrobeniusModuleSpec build_frobenius_module(Vertex p, Vertex q, int max_field_bits,
                                           bool literal_degree) {
    if (p == q || p <= 1 || q <= 1)
        throw ValidationError("need two distinct primes");
    int d = literal_degree ? static_cast<int>(p - 1) : frobenius_degree(p, q);
    double bits = d * std::log2(static_cast<double>(q));
    if (bits > max_field_bits)
        throw FieldTooLarge("field F_{" + std::to_string(q) + "^" + std::to_string(d) +
                            "} exceeds 2^" + std::to_string(max_field_bits));
    FiniteField f(q, d);
    FrobeniusModuleSpec spec;
    spec.p = p;
    spec.field = f.spec();
    spec.generator_action = f.element_of_order(p);
    return spec;
}

bool verify_fixed_point_free(const FrobeniusModuleSpec& spec) {
    FiniteField f(spec.field);
    FqElem power = spec.generator_action;
    for (Vertex k = 1; k < spec.p; ++k) {
        // scalar multiplication fixes x iff (power - 1) x = 0; scan anyway per
        // the exhaustive contract
        for (unsigned long long idx = 0; idx < f.order(); ++idx) {
            FqElem x = f.element_at(idx);
            if (f.mul(power, x) == x && !f.is_zero(x)) return false;
        }
        power = f.mul(power, spec.generator_action);
    }
    if (!f.is_one(power)) return false; // generator order is not exactly p
    return true;
}

// --- recipes ---

long long SinkFactor::dim() const {
    long long d = degree;
    if (kind == Induced)
        for (Vertex w : twist_primes) d *= w;
    return d;
}

long long VComponent::dim() const {
    long long d = 1;
    for (const auto& f : factors) d *= f.dim();
    return d;
}

unsigned long long SolvableRecipe::order_or_zero() const {
    u128 total = 1;
    const u128 cap = static_cast<u128>(1) << 62;
    for (const auto& vc : V_components) {
        long long dim = vc.dim();
        for (long long i = 0; i < dim; ++i) {
            total *= static_cast<u128>(vc.v);
            if (total > cap) return 0;
        }
    }
    for (const auto& uc : U_components) {
        total *= static_cast<u128>(uc.u);
        if (total > cap) return 0;
    }
    for (Vertex w : W_primes) {
        total *= static_cast<u128>(w);
        if (total > cap) return 0;
    }
    return static_cast<unsigned long long>(total);
}

std::string recipe_to_json(const SolvableRecipe& r) {
    nlohmann::json j;
    j["W_primes"] = r.W_primes;
    j["U_components"] = nlohmann::json::array();
    for (const auto& uc : r.U_components) {
        nlohmann::json ju;
        ju["u"] = uc.u;
        ju["twists"] = nlohmann::json::object();
        for (const auto& [w, k] : uc.twists) ju["twists"][std::to_string(w)] = k;
        j["U_components"].push_back(ju);
    }
    j["V_components"] = nlohmann::json::array();
    for (const auto& vc : r.V_components) {
        nlohmann::json jv;
        jv["v"] = vc.v;
        jv["dim"] = vc.dim();
        jv["factors"] = nlohmann::json::array();
        for (const auto& f : vc.factors) {
            nlohmann::json jf;
            jf["kind"] = f.kind == SinkFactor::Induced ? "induced" : "scalar";
            jf["actor"] = f.actor;
            jf["degree"] = f.degree;
            if (f.kind == SinkFactor::Induced) jf["twist_primes"] = f.twist_primes;
            jv["factors"].push_back(jf);
        }
        j["V_components"].push_back(jv);
    }
    j["target"] = nlohmann::json::parse(to_json(r.target));
    j["order"] = r.order_or_zero();
    if (r.e_profile) {
        j["E"] = nlohmann::json::object();
        j["E"]["group"] = r.e_profile->data.name;
        j["E"]["module_rows"] = nlohmann::json::object();
        for (const auto& [p, row] : r.e_profile->module_rows)
            j["E"]["module_rows"][std::to_string(p)] = row;
    }
    return j.dump();
}

SolvableRecipe build_solvable_recipe(const PrimeGraph& xi, const Coloring& coloring,
                                     const std::optional<EProfile>& e) {
    std::set<Vertex> piE;
    if (e) piE = e->data.pi;
    std::set<Vertex> core_verts;
    for (Vertex v : xi.vertices())
        if (!piE.count(v)) core_verts.insert(v);
    PrimeGraph core = induced(xi, core_verts);

    if (!is_triangle_free(core))
        throw HypothesisViolation("graph outside pi(E) contains a triangle");
    if (!coloring.is_proper_on(core))
        throw HypothesisViolation("coloring is not proper outside pi(E)");
    for (Vertex v : core.vertices())
        if (coloring.color_of(v) < 0 || coloring.color_of(v) > 2)
            throw HypothesisViolation("coloring uses more than 3 classes");
    if (e) {
        for (Vertex v : neighbors(xi, piE))
            if (!piE.count(v) && coloring.color_of(v) != 2)
                throw HypothesisViolation(
                    "neighbors of pi(E) must sit in the last color class");
    }

    Orientation o = orient_by_coloring(core, coloring);
    // Longest outgoing path per vertex = longest incoming path in the reverse.
    Orientation rev;
    rev.base = o.base;
    for (const auto& [from, to] : o.arcs) rev.arcs.emplace_back(to, from);
    std::sort(rev.arcs.begin(), rev.arcs.end());
    auto level = longest_path_lengths(rev);

    SolvableRecipe r;
    r.target = xi;
    r.coloring = coloring;
    r.e_profile = e;

    std::map<Vertex, std::vector<Vertex>> in_sources; // arc sources per target
    for (const auto& [from, to] : o.arcs) in_sources[to].push_back(from);
    for (auto& [v, srcs] : in_sources) std::sort(srcs.begin(), srcs.end());

    std::map<Vertex, UComponent> u_comps;
    for (Vertex v : core.vertices()) {
        if (level.at(v) != 1) continue;
        UComponent uc;
        uc.u = v;
        for (Vertex w : in_sources[v]) {
            if (level.at(w) < 2)
                throw HypothesisViolation("arc into a middle vertex from a non-source");
            if ((v - 1) % w != 0)
                throw HypothesisViolation("source prime " + std::to_string(w) +
                                          " does not divide " + std::to_string(v) + "-1");
            long long g = smallest_primitive_root(v);
            uc.twists[w] = mod_pow(g, (v - 1) / w, v);
        }
        u_comps[v] = uc;
    }
    for (Vertex v : core.vertices()) {
        if (level.at(v) == 2) r.W_primes.push_back(v);
        if (level.at(v) > 2)
            throw HypothesisViolation("orientation admits a directed 3-path");
    }
    for (const auto& [u, uc] : u_comps) r.U_components.push_back(uc);

    for (Vertex v : core.vertices()) {
        if (level.at(v) != 0) continue;
        VComponent vc;
        vc.v = v;
        for (Vertex s : in_sources[v]) {
            SinkFactor f;
            f.actor = s;
            f.degree = frobenius_degree(s, v);
            if (u_comps.count(s)) {
                f.kind = SinkFactor::Induced;
                for (const auto& [w, k] : u_comps.at(s).twists) f.twist_primes.push_back(w);
            } else {
                f.kind = SinkFactor::Scalar;
            }
            vc.factors.push_back(f);
        }
        r.V_components.push_back(vc);
    }
    return r;
}

namespace {

bool next_coloring_assignment(std::vector<int>& colors) {
    for (std::size_t i = colors.size(); i-- > 0;) {
        if (++colors[i] < 3) return true;
        colors[i] = 0;
    }
    return false;
}

} // namespace

std::optional<SolvableRecipe> find_solvable_recipe(const PrimeGraph& xi) {
    const auto& vs = xi.vertices();
    std::vector<int> colors(vs.size(), 0);
    do {
        Coloring c;
        c.k = 3;
        for (std::size_t i = 0; i < vs.size(); ++i) c.assignment[vs[i]] = colors[i];
        if (!c.is_proper_on(xi)) continue;
        try {
            return build_solvable_recipe(xi, c);
        } catch (const HypothesisViolation&) {
            continue;
        }
    } while (next_coloring_assignment(colors));
    return std::nullopt;
}

// --- explicit engine ---

struct ExplicitGroup::FactorData {
    SinkFactor factor;
    FiniteField field;           // F_{v^degree}
    std::vector<FqElem> scalars; // powers 0..actor-1 of the order-actor element
    long long slots = 1;         // product of twist primes (Induced), else 1
    std::vector<long long> phi_inv; // per slot, inverse of the twist product mod u
    long long dim = 0;

    FactorData(const SinkFactor& f, Vertex v, const std::map<Vertex, long long>& twists)
        : factor(f), field(v, f.degree) {
        FqElem base = field.element_of_order(f.actor);
        FqElem acc = field.one();
        for (Vertex i = 0; i < f.actor; ++i) {
            scalars.push_back(acc);
            acc = field.mul(acc, base);
        }
        if (f.kind == SinkFactor::Induced) {
            for (Vertex w : f.twist_primes) slots *= w;
            phi_inv.resize(slots);
            for (long long s = 0; s < slots; ++s) {
                long long t = s, phi = 1;
                for (Vertex w : f.twist_primes) {
                    long long a = t % w;
                    t /= w;
                    phi = phi * mod_pow(twists.at(w), a, f.actor) % f.actor;
                }
                phi_inv[s] = mod_inverse(phi, f.actor);
            }
        }
        dim = slots * f.degree;
    }
};

ExplicitGroup::~ExplicitGroup() = default;
ExplicitGroup::ExplicitGroup(const ExplicitGroup&) = default;

ExplicitGroup::ExplicitGroup(const SolvableRecipe& recipe, unsigned long long order_bound)
    : recipe_(recipe) {
    if (recipe.e_profile)
        throw HypothesisViolation(
            "recipes with a nonsolvable slot are symbolic only");
    order_ = recipe.order_or_zero();
    if (order_ == 0 || order_ > order_bound)
        throw OrderBoundExceeded("group order exceeds the bound of " +
                                 std::to_string(order_bound));
    for (const auto& vc : recipe_.V_components) {
        std::vector<FactorData> fds;
        for (const auto& f : vc.factors) {
            std::map<Vertex, long long> twists;
            if (f.kind == SinkFactor::Induced) {
                for (const auto& uc : recipe_.U_components)
                    if (uc.u == f.actor) twists = uc.twists;
            }
            fds.emplace_back(f, vc.v, twists);
        }
        factor_data_.push_back(std::move(fds));
        v_dims_.push_back(vc.dim());
    }
}

GroupElement ExplicitGroup::identity() const {
    GroupElement g;
    for (long long d : v_dims_) g.v.emplace_back(d, 0);
    g.u.assign(recipe_.U_components.size(), 0);
    g.w.assign(recipe_.W_primes.size(), 0);
    return g;
}

bool ExplicitGroup::is_identity(const GroupElement& g) const {
    for (const auto& vec : g.v)
        for (int x : vec)
            if (x != 0) return false;
    for (long long e : g.u)
        if (e != 0) return false;
    for (long long e : g.w)
        if (e != 0) return false;
    return true;
}

void ExplicitGroup::apply_action(const GroupElement& k,
                                 std::vector<std::vector<int>>& v) const {
    for (std::size_t ci = 0; ci < factor_data_.size(); ++ci) {
        const Vertex p = recipe_.V_components[ci].v;
        auto& vec = v[ci];
        long long stride = 1;
        for (const auto& fd : factor_data_[ci]) {
            const long long fdim = fd.dim;
            const long long outer = static_cast<long long>(vec.size()) / (stride * fdim);
            // resolve the acting exponents for this factor
            long long j = 0;                // U-exponent (Induced)
            std::vector<long long> wexp;    // W-exponents on the slot group
            long long scalar_exp = 0;       // W-exponent (Scalar)
            if (fd.factor.kind == SinkFactor::Induced) {
                for (std::size_t i = 0; i < recipe_.U_components.size(); ++i)
                    if (recipe_.U_components[i].u == fd.factor.actor) j = k.u[i];
                for (Vertex w : fd.factor.twist_primes)
                    for (std::size_t i = 0; i < recipe_.W_primes.size(); ++i)
                        if (recipe_.W_primes[i] == w) wexp.push_back(k.w[i]);
            } else {
                for (std::size_t i = 0; i < recipe_.W_primes.size(); ++i)
                    if (recipe_.W_primes[i] == fd.factor.actor) scalar_exp = k.w[i];
            }
            if (fd.factor.kind == SinkFactor::Scalar && scalar_exp == 0) {
                stride *= fdim;
                continue;
            }
            const int e = fd.factor.degree;
            for (long long o = 0; o < outer; ++o)
                for (long long s = 0; s < stride; ++s) {
                    // gather the axis slice
                    std::vector<int> slice(fdim);
                    const long long base = o * stride * fdim + s;
                    for (long long i = 0; i < fdim; ++i)
                        slice[i] = vec[base + i * stride];
                    std::vector<int> out(fdim, 0);
                    if (fd.factor.kind == SinkFactor::Scalar) {
                        FqElem x(slice.begin(), slice.end());
                        FqElem y = fd.field.mul(fd.scalars[scalar_exp %
                                                           fd.factor.actor], x);
                        for (int i = 0; i < e; ++i) out[i] = y[i];
                    } else {
                        // out[slot t] = sigma^{j * phi_inv[t]} * in[t - wexp]
                        for (long long src = 0; src < fd.slots; ++src) {
                            long long t = 0, mult = 1, rem = src;
                            for (std::size_t wi = 0; wi < fd.factor.twist_primes.size();
                                 ++wi) {
                                Vertex w = fd.factor.twist_primes[wi];
                                long long a = (rem % w + wexp[wi]) % w;
                                rem /= w;
                                t += a * mult;
                                mult *= w;
                            }
                            FqElem x(slice.begin() + src * e,
                                     slice.begin() + (src + 1) * e);
                            long long pw = j % fd.factor.actor * fd.phi_inv[t] %
                                           fd.factor.actor;
                            FqElem y = fd.field.mul(fd.scalars[pw], x);
                            for (int i = 0; i < e; ++i) out[t * e + i] = y[i];
                        }
                    }
                    for (long long i = 0; i < fdim; ++i)
                        vec[base + i * stride] = out[i];
                }
            stride *= fdim;
        }
        (void)p;
    }
}

GroupElement ExplicitGroup::mul(const GroupElement& a, const GroupElement& b) const {
    GroupElement r = a;
    // K-part: per U component, a's W-part twists b's U exponent
    for (std::size_t i = 0; i < recipe_.U_components.size(); ++i) {
        const auto& uc = recipe_.U_components[i];
        long long twisted = b.u[i] % uc.u;
        for (const auto& [w, k] : uc.twists) {
            for (std::size_t wi = 0; wi < recipe_.W_primes.size(); ++wi)
                if (recipe_.W_primes[wi] == w)
                    twisted = twisted * mod_pow(k, a.w[wi], uc.u) % uc.u;
        }
        r.u[i] = (a.u[i] + twisted) % uc.u;
    }
    for (std::size_t i = 0; i < recipe_.W_primes.size(); ++i)
        r.w[i] = (a.w[i] + b.w[i]) % recipe_.W_primes[i];
    // V-part: a.v + rho(a_K) b.v
    std::vector<std::vector<int>> bv = b.v;
    apply_action(a, bv);
    for (std::size_t ci = 0; ci < bv.size(); ++ci) {
        const int p = static_cast<int>(recipe_.V_components[ci].v);
        for (std::size_t i = 0; i < bv[ci].size(); ++i)
            r.v[ci][i] = (a.v[ci][i] + bv[ci][i]) % p;
    }
    return r;
}

GroupElement ExplicitGroup::inverse(const GroupElement& g) const {
    GroupElement inv = identity();
    for (std::size_t i = 0; i < recipe_.W_primes.size(); ++i)
        inv.w[i] = (recipe_.W_primes[i] - g.w[i]) % recipe_.W_primes[i];
    // with w-part fixed, solve (g_u, g_w)(x_u, inv_w)... build K inverse by
    // the formula k^{-1} = (-phi_{w^{-1}}(u), w^{-1})
    for (std::size_t i = 0; i < recipe_.U_components.size(); ++i) {
        const auto& uc = recipe_.U_components[i];
        long long val = (uc.u - g.u[i] % uc.u) % uc.u;
        for (const auto& [w, k] : uc.twists)
            for (std::size_t wi = 0; wi < recipe_.W_primes.size(); ++wi)
                if (recipe_.W_primes[wi] == w)
                    val = val * mod_pow(k, inv.w[wi], uc.u) % uc.u;
        inv.u[i] = val;
    }
    // V-part: -rho(k^{-1}) v
    std::vector<std::vector<int>> nv = g.v;
    apply_action(inv, nv);
    for (std::size_t ci = 0; ci < nv.size(); ++ci) {
        const int p = static_cast<int>(recipe_.V_components[ci].v);
        for (std::size_t i = 0; i < nv[ci].size(); ++i)
            inv.v[ci][i] = (p - nv[ci][i] % p) % p;
    }
    return inv;
}

namespace {

GroupElement power(const ExplicitGroup& g, GroupElement base, unsigned long long e) {
    GroupElement r = g.identity();
    while (e) {
        if (e & 1) r = g.mul(r, base);
        base = g.mul(base, base);
        e >>= 1;
    }
    return r;
}

} // namespace

unsigned long long ExplicitGroup::element_order(const GroupElement& g) const {
    unsigned long long k_order = 1;
    for (std::size_t i = 0; i < recipe_.W_primes.size(); ++i)
        if (g.w[i] != 0) k_order *= static_cast<unsigned long long>(recipe_.W_primes[i]);
    GroupElement h = power(*this, g, k_order);
    // h now has trivial W-part; its U-part is a direct product of cyclic groups
    unsigned long long u_order = 1;
    for (std::size_t i = 0; i < recipe_.U_components.size(); ++i)
        if (h.u[i] != 0) u_order *= static_cast<unsigned long long>(recipe_.U_components[i].u);
    k_order *= u_order;
    if (u_order > 1) h = power(*this, h, u_order);
    // h is now a pure V-part element
    unsigned long long v_order = 1;
    for (std::size_t ci = 0; ci < h.v.size(); ++ci)
        for (int x : h.v[ci])
            if (x != 0) {
                v_order *= static_cast<unsigned long long>(recipe_.V_components[ci].v);
                break;
            }
    return k_order * v_order;
}

GroupElement ExplicitGroup::element_at(unsigned long long index) const {
    GroupElement g = identity();
    for (std::size_t ci = 0; ci < g.v.size(); ++ci) {
        const unsigned long long p =
            static_cast<unsigned long long>(recipe_.V_components[ci].v);
        for (auto& x : g.v[ci]) {
            x = static_cast<int>(index % p);
            index /= p;
        }
    }
    for (std::size_t i = 0; i < g.u.size(); ++i) {
        const unsigned long long u =
            static_cast<unsigned long long>(recipe_.U_components[i].u);
        g.u[i] = static_cast<long long>(index % u);
        index /= u;
    }
    for (std::size_t i = 0; i < g.w.size(); ++i) {
        const unsigned long long w = static_cast<unsigned long long>(recipe_.W_primes[i]);
        g.w[i] = static_cast<long long>(index % w);
        index /= w;
    }
    return g;
}

std::set<Vertex> ExplicitGroup::primes() const {
    std::set<Vertex> out;
    for (const auto& vc : recipe_.V_components) out.insert(vc.v);
    for (const auto& uc : recipe_.U_components) out.insert(uc.u);
    for (Vertex w : recipe_.W_primes) out.insert(w);
    return out;
}

void ExplicitGroup::verify_axioms(unsigned long long seed, int triples) const {
    std::mt19937_64 rng(seed);
    auto sample = [&]() { return element_at(rng() % order_); };
    for (int i = 0; i < triples; ++i) {
        GroupElement a = sample(), b = sample(), c = sample();
        GroupElement lhs = mul(mul(a, b), c);
        GroupElement rhs = mul(a, mul(b, c));
        if (!(lhs.v == rhs.v && lhs.u == rhs.u && lhs.w == rhs.w))
            throw ValidationError("associativity failed on a sampled triple");
        if (!is_identity(mul(a, inverse(a))) || !is_identity(mul(inverse(a), a)))
            throw ValidationError("inverse axiom failed on a sampled element");
        GroupElement ea = mul(identity(), a);
        if (!(ea.v == a.v && ea.u == a.u && ea.w == a.w))
            throw ValidationError("identity axiom failed on a sampled element");
    }
}

ExplicitGroup realize_explicit(const SolvableRecipe& r, unsigned long long order_bound,
                               unsigned long long axiom_seed) {
    ExplicitGroup g(r, order_bound);
    g.verify_axioms(axiom_seed, 100);
    return g;
}

PrimeGraph pgc_of_explicit(const ExplicitGroup& g, unsigned long long full_scan_bound) {
    std::set<Vertex> ps = g.primes();
    std::vector<Vertex> verts(ps.begin(), ps.end());
    std::set<std::pair<Vertex, Vertex>> adjacent; // edges of Gamma(G)
    auto mark = [&](unsigned long long n) {
        std::vector<Vertex> divisors;
        for (Vertex p : verts)
            if (n % static_cast<unsigned long long>(p) == 0) divisors.push_back(p);
        for (std::size_t i = 0; i < divisors.size(); ++i)
            for (std::size_t j = i + 1; j < divisors.size(); ++j)
                adjacent.insert({divisors[i], divisors[j]});
    };
    if (g.order() <= full_scan_bound) {
        for (unsigned long long idx = 0; idx < g.order(); ++idx)
            mark(g.element_order(g.element_at(idx)));
    } else {
        // documented fallback: orders over products of up to three members of
        // a deterministic generating set (unit vectors and cyclic generators)
        std::vector<GroupElement> gens;
        GroupElement e = g.identity();
        for (std::size_t ci = 0; ci < e.v.size(); ++ci)
            for (std::size_t i = 0; i < e.v[ci].size(); ++i) {
                GroupElement x = g.identity();
                x.v[ci][i] = 1;
                gens.push_back(x);
            }
        for (std::size_t i = 0; i < e.u.size(); ++i) {
            GroupElement x = g.identity();
            x.u[i] = 1;
            gens.push_back(x);
        }
        for (std::size_t i = 0; i < e.w.size(); ++i) {
            GroupElement x = g.identity();
            x.w[i] = 1;
            gens.push_back(x);
        }
        for (const auto& a : gens) {
            mark(g.element_order(a));
            for (const auto& b : gens) {
                GroupElement ab = g.mul(a, b);
                mark(g.element_order(ab));
                for (const auto& c : gens) mark(g.element_order(g.mul(ab, c)));
            }
        }
    }
    std::vector<std::pair<Vertex, Vertex>> pgc_edges;
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (!adjacent.count({verts[i], verts[j]}))
                pgc_edges.emplace_back(verts[i], verts[j]);
    return new_graph(verts, pgc_edges);
}

PrimeGraph pgc_semidirect_symbolic(const std::map<Vertex, std::set<Vertex>>& A_primes,
                                   const GroupData& H,
                                   const PrimeGraph& K_pgc,
                                   const std::set<Vertex>& K_primes) {
    for (Vertex k : K_primes) {
        if (H.pi.count(k))
            throw DisjointnessViolation("K prime " + std::to_string(k) +
                                        " lies in pi of the middle factor");
        if (A_primes.count(k))
            throw DisjointnessViolation("K prime " + std::to_string(k) +
                                        " lies in pi of the normal factor");
    }
    std::set<Vertex> all(H.pi.begin(), H.pi.end());
    all.insert(K_primes.begin(), K_primes.end());
    for (const auto& [p, fixers] : A_primes) all.insert(p);

    auto in_A = [&](Vertex p) { return A_primes.count(p) > 0; };
    auto in_H = [&](Vertex p) { return H.pi.count(p) > 0; };
    auto in_K = [&](Vertex p) { return K_primes.count(p) > 0; };

    std::vector<Vertex> verts(all.begin(), all.end());
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            Vertex r = verts[i], s = verts[j];
            bool edge;
            if (in_A(r) && in_A(s)) {
                edge = false; // both divide |A|: orders r, s meet inside A
            } else if (in_A(r) || in_A(s)) {
                Vertex p = in_A(r) ? r : s;
                Vertex q = in_A(r) ? s : r;
                edge = A_primes.at(p).count(q) == 0; // q acts Frobeniusly on A_p
                if (in_H(p) && in_H(q)) edge = edge && H.pgc.has_edge(p, q);
            } else if (in_H(r) && in_H(s)) {
                edge = H.pgc.has_edge(r, s);
            } else if (in_K(r) && in_K(s)) {
                edge = K_pgc.has_edge(r, s);
            } else {
                edge = false; // commuting direct factors
            }
            if (edge) edges.emplace_back(r, s);
        }
    return new_graph(verts, edges);
}

} // namespace gk
