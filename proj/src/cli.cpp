#include "ainf/cli.hpp"

#include "ainf/cyclic.hpp"
#include "ainf/deformation.hpp"
#include "ainf/gerstenhaber.hpp"
#include "ainf/spec.hpp"
#include "ainf/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace ainf::cli {

namespace {

using json = nlohmann::json;

std::string format_vec(const SparseVec& v, const std::vector<std::string>& labels)
{
    if (v.empty()) return "0";
    std::string out;
    for (const auto& [i, c] : v) {
        std::string coeff = to_string(c);
        std::string term = c == 1 ? labels[static_cast<std::size_t>(i)] : coeff + "*" + labels[static_cast<std::size_t>(i)];
        if (out.empty())
            out = term;
        else if (c < 0)
            out += " - " + (c == -1 ? labels[static_cast<std::size_t>(i)] : to_string(-c) + "*" + labels[static_cast<std::size_t>(i)]);
        else
            out += " + " + term;
    }
    return out;
}

json vec_json(const SparseVec& v, const std::vector<std::string>& labels)
{
    json j = json::object();
    for (const auto& [i, c] : v) j[labels[static_cast<std::size_t>(i)]] = to_string(c);
    return j;
}

json word_json(const Word& w, const std::vector<std::string>& labels)
{
    json j = json::array();
    for (int a : w) j.push_back(labels[static_cast<std::size_t>(a)]);
    return j;
}

json cochain_json(const Cochain& c, const BasisInfo& b)
{
    json out = json::array();
    for (const auto& [n, comp] : c.components)
        for (const auto& [w, v] : comp)
            if (!v.empty()) out.push_back({{"inputs", word_json(w, b.label)}, {"value", vec_json(v, b.label)}});
    return out;
}

std::vector<std::string> cochain_lines(const Cochain& c, const BasisInfo& b, const std::string& name)
{
    std::vector<std::string> out;
    for (const auto& [n, comp] : c.components)
        for (const auto& [w, v] : comp)
            if (!v.empty()) out.push_back("  " + name + "_" + std::to_string(n) + format_word(w, b.label) + " = " + format_vec(v, b.label));
    return out;
}

std::string pad(const std::string& s, std::size_t n)
{
    return s.size() >= n ? s + " " : s + std::string(n - s.size(), ' ');
}

void set_status(Report& r, int code, const std::string& status)
{
    r.exit_code = code;
    r.status = status;
}

// Worst of the two: violation beats inconclusive beats ok.
void escalate(Report& r, int code)
{
    if (code == kViolation || (code == kInconclusive && r.exit_code == kOk)) r.exit_code = code;
}

void finish_plain(Report& r)
{
    r.status = r.exit_code == kOk ? "ok" : r.exit_code == kInconclusive ? "inconclusive" : "violation";
}

std::pair<int, int> range_of(const Options& opt, int hi)
{
    if (opt.degrees) return *opt.degrees;
    return {0, std::min(4, hi)};
}

void theorem_into(Report& r, const TheoremReport& t)
{
    r.text.push_back(t.name);
    r.text.push_back(pad("theory", 28) + pad("deg", 5) + pad("source", 8) + pad("target", 8) + "rank");
    for (const auto& row : t.rows) {
        std::string rank = row.induced_rank < 0 ? "-" : std::to_string(row.induced_rank);
        std::string flag = !row.stabilized ? "  (not stabilized)" : row.ok() ? "" : "  MISMATCH";
        r.text.push_back(pad(row.theory, 28) + pad(std::to_string(row.degree), 5) + pad(std::to_string(row.source), 8) +
                         pad(std::to_string(row.target), 8) + rank + flag);
        json j{{"theory", row.theory}, {"degree", row.degree}, {"source", row.source}, {"target", row.target},
               {"stabilized", row.stabilized}, {"ok", row.ok()}};
        j["induced_rank"] = row.induced_rank < 0 ? json(nullptr) : json(row.induced_rank);
        r.results.push_back(j);
    }
    r.evidence.insert(r.evidence.end(), t.evidence.begin(), t.evidence.end());
    if (!t.precondition) r.evidence.push_back("precondition failed");
    const std::string s = t.status();
    set_status(r, s == "PASS" ? kOk : s == "INCONCLUSIVE" ? kInconclusive : kViolation, s);
}

Cochain random_cochain(std::mt19937_64& rng, const BasisInfo& b, int k, int max_weight)
{
    std::uniform_int_distribution<int> val(-2, 2);
    Cochain c{k, {}};
    std::vector<Word> layer{Word{}};
    for (int n = 1; n <= max_weight; ++n) {
        std::vector<Word> next;
        for (const auto& w : layer)
            for (int a = 0; a < b.size(); ++a) {
                Word x = w;
                x.push_back(a);
                next.push_back(x);
            }
        layer = std::move(next);
        for (const auto& w : layer) {
            const int target = b.internal(w) + n - 1 + k;
            std::map<int, Scalar> v;
            for (int o = 0; o < b.size(); ++o)
                if (b.degree[static_cast<std::size_t>(o)] == target && val(rng) > 0) v[o] = val(rng);
            SparseVec sv = SparseVec::from_map(v);
            if (!sv.empty()) c.add_term(w, sv);
        }
    }
    return c;
}

int sign(int e) { return e % 2 == 0 ? 1 : -1; }

Report cmd_validate(const std::string& path, const Options& opt)
{
    Report r;
    AlgebraSpec s = load_spec(path, false);
    const AInfinityAlgebra& a = s.algebra;
    const BasisInfo b = a.basis();
    ComplexWindow{opt.max_weight, opt.max_degree}.check(a);
    auto stasheff = check_stasheff(a.m, b);
    auto units = unit_violations(a);
    json dims = json::array();
    for (int d = 0; d <= a.top_degree() && a.dim() > 0; ++d) dims.push_back(a.space.dim(d));
    json arities = json::array();
    for (const auto& [n, comp] : a.m.components)
        if (!comp.empty()) arities.push_back(n);
    json witnesses = json::array();
    for (const auto& v : stasheff)
        witnesses.push_back({{"weight", v.weight}, {"inputs", word_json(v.witness, b.label)}, {"value", vec_json(v.value, b.label)}});
    r.results.push_back({{"name", a.name}, {"dims", dims}, {"arities", arities}, {"unital", a.unit.has_value()},
                         {"stasheff_violations", witnesses}, {"unit_violations", units}});
    std::ostringstream head;
    head << a.name << ": dims " << dims.dump() << ", products m_n for n in " << arities.dump();
    r.text.push_back(head.str());
    for (std::size_t i = 0; i < stasheff.size() && i < 10; ++i) r.text.push_back(describe_violation(stasheff[i], b));
    if (stasheff.size() > 10) r.text.push_back("... " + std::to_string(stasheff.size() - 10) + " more");
    for (const auto& u : units) r.text.push_back("unit is not strict: " + u);
    if (stasheff.empty() && units.empty()) r.text.push_back("Stasheff identities hold on every basis word");
    escalate(r, stasheff.empty() && units.empty() ? kOk : kViolation);
    finish_plain(r);
    return r;
}

Report cmd_homology(const std::string& theory, const AlgebraSpec& s, const ComplexWindow& win, const Options& opt)
{
    Report r;
    CyclicHomology h(s.algebra, win);
    auto [lo, hi] = range_of(opt, win.reliable_bound());
    for (int n = lo; n <= hi; ++n) {
        try {
            const int d = theory == "HH" ? h.hh(n) : h.hc(n);
            r.results.push_back({{"theory", theory}, {"degree", n}, {"dim", d}});
            r.text.push_back(theory + "_" + std::to_string(n) + " = " + std::to_string(d));
        } catch (const WindowExceeded& e) {
            r.results.push_back({{"theory", theory}, {"degree", n}, {"dim", nullptr}});
            r.evidence.push_back(e.what());
            r.text.push_back(theory + "_" + std::to_string(n) + " = ? (beyond the reliable bound " + std::to_string(win.reliable_bound()) + ")");
            escalate(r, kInconclusive);
        }
    }
    finish_plain(r);
    return r;
}

Report cmd_hp(const AlgebraSpec& s, const ComplexWindow& win, const Options& opt)
{
    Report r;
    CyclicHomology h(s.algebra, win);
    std::vector<HomologyReport> hp;
    for (int p = 0; p <= 1; ++p) hp.push_back(h.hp(p, opt.stabilize.value_or(-1)));
    int at = 0;
    bool stable = true;
    std::string line;
    for (int p = 0; p <= 1; ++p) {
        const auto& x = hp[static_cast<std::size_t>(p)];
        json ladder(x.ladder);
        r.results.push_back({{"theory", "HP"}, {"parity", p}, {"dim", x.dim}, {"stabilized", x.stabilized},
                             {"stable_at", x.stable_at ? json(*x.stable_at) : json(nullptr)}, {"ladder", ladder}});
        std::string l;
        for (int v : x.ladder) l += (l.empty() ? "" : " ") + std::to_string(v);
        r.evidence.push_back("HP" + std::to_string(p) + " ladder (dim HC_" + std::to_string(p) + ", rank S^k...): " + l);
        for (const auto& n : x.notes) r.evidence.push_back(n);
        if (!line.empty()) line += ", ";
        line += "HP" + std::to_string(p) + " = " + std::to_string(x.dim);
        if (x.stabilized)
            at = std::max(at, x.stable_at.value_or(0));
        else
            stable = false;
    }
    if (stable) {
        r.text.push_back(line + ", stabilized at k=" + std::to_string(at));
    } else {
        r.text.push_back(line + ", not stabilized within the window");
        for (int p = 0; p <= 1; ++p)
            if (!hp[static_cast<std::size_t>(p)].stabilized) r.text.push_back("HP" + std::to_string(p) + " is a lower bound at most; increase --max-weight");
        escalate(r, kInconclusive);
    }
    finish_plain(r);
    return r;
}

Report cmd_traces(const AlgebraSpec& s, const ComplexWindow& win)
{
    Report r;
    const AInfinityAlgebra& a = s.algebra;
    const BasisInfo b = a.basis();
    auto traces = closed_graded_traces(a);
    CyclicHomology h(a, win);
    const int hc0 = h.hc(0);
    json list = json::array();
    for (const auto& t : traces) list.push_back(vec_json(t, b.label));
    r.results.push_back({{"closed_traces", list}, {"dim", traces.size()}, {"hc0", hc0}});
    r.text.push_back("closed graded traces: " + std::to_string(traces.size()));
    for (const auto& t : traces) r.text.push_back("  tau = " + format_vec(t, b.label) + " (values on basis elements)");
    r.text.push_back("HC_0 = " + std::to_string(hc0));
    if (static_cast<int>(traces.size()) != hc0) {
        r.evidence.push_back("trace space and HC_0 differ");
        escalate(r, kViolation);
    }
    if (s.trace) {
        auto defect = trace_defect(a.m, *s.trace, b);
        if (defect) {
            std::string w = defect->right.empty() ? "m1" + format_word(defect->left, b.label)
                                                  : "(" + format_word(defect->left, b.label) + ", " + format_word(defect->right, b.label) + ")";
            r.text.push_back("given trace is not closed at " + w + ": defect " + to_string(defect->value));
            escalate(r, kViolation);
        } else {
            r.text.push_back("given trace is closed");
        }
    }
    finish_plain(r);
    return r;
}

Report cmd_bracket(const AlgebraSpec& s, const Options& opt)
{
    Report r;
    const AInfinityAlgebra& a = s.algebra;
    const BasisInfo b = a.basis();
    Cochain mm = bracket(a.m, a.m, b);
    mm.prune();
    r.results.push_back({{"bracket", "[m,m]"}, {"value", cochain_json(mm, b)}});
    r.text.push_back(std::string("[m,m] ") + (mm.is_zero() ? "= 0" : "!= 0"));
    if (!mm.is_zero()) {
        auto lines = cochain_lines(mm, b, "[m,m]");
        r.text.insert(r.text.end(), lines.begin(), lines.end());
        escalate(r, kViolation);
    }
    for (std::size_t i = 0; i < s.derivations.size(); ++i) {
        const auto& d = s.derivations[i];
        Cochain dd = deformation_differential(d.cochain, a);
        dd.prune();
        r.results.push_back({{"bracket", "[m," + d.name + "]"}, {"value", cochain_json(dd, b)}});
        r.text.push_back("[m," + d.name + "] " + (dd.is_zero() ? "= 0" : "!= 0"));
        auto lines = cochain_lines(dd, b, "[m," + d.name + "]");
        r.text.insert(r.text.end(), lines.begin(), lines.end());
        for (std::size_t j = i + 1; j < s.derivations.size(); ++j) {
            const auto& e = s.derivations[j];
            Cochain de = bracket(d.cochain, e.cochain, b);
            de.prune();
            const std::string name = "[" + d.name + "," + e.name + "]";
            r.results.push_back({{"bracket", name}, {"value", cochain_json(de, b)}});
            r.text.push_back(name + (de.is_zero() ? " = 0" : ":"));
            auto more = cochain_lines(de, b, name);
            r.text.insert(r.text.end(), more.begin(), more.end());
        }
    }
    // seeded identities on random cochains
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<int> deg(-2, 0);
    int failures = 0;
    const int cases = 20;
    for (int t = 0; t < cases; ++t) {
        Cochain x = random_cochain(rng, b, deg(rng), 2);
        Cochain y = random_cochain(rng, b, deg(rng), 2);
        Cochain z = random_cochain(rng, b, deg(rng), 2);
        const int kx = x.suspended_degree, ky = y.suspended_degree, kz = z.suspended_degree;
        Cochain anti = bracket(x, y, b) + bracket(y, x, b).scaled(sign(kx * ky));
        Cochain jac = bracket(x, bracket(y, z, b), b).scaled(sign(kx * kz)) + bracket(y, bracket(z, x, b), b).scaled(sign(ky * kx)) +
                      bracket(z, bracket(x, y, b), b).scaled(sign(kz * ky));
        Cochain dd = deformation_differential(deformation_differential(x, a), a);
        anti.prune();
        jac.prune();
        dd.prune();
        if (!anti.is_zero() || !jac.is_zero() || !dd.is_zero()) ++failures;
    }
    r.results.push_back({{"random_cases", cases}, {"seed", opt.seed}, {"failures", failures}});
    r.text.push_back("antisymmetry, Jacobi and delta^2 = 0 on " + std::to_string(cases) + " random triples (seed " +
                     std::to_string(opt.seed) + "): " + std::to_string(failures) + " failures");
    if (failures) escalate(r, kViolation);
    finish_plain(r);
    return r;
}

Report cmd_cohomology(const AlgebraSpec& s, const ComplexWindow& win, const Options& opt)
{
    Report r;
    DeformationComplex dc(s.algebra, win);
    auto [lo, hi] = range_of(opt, 3);
    for (int n = lo; n <= hi; ++n) {
        try {
            const int d = dc.cohomology_dim(n);
            r.results.push_back({{"theory", "HH^"}, {"degree", n}, {"dim", d}});
            r.text.push_back("HH^" + std::to_string(n) + "(A,A) = " + std::to_string(d));
        } catch (const WindowExceeded& e) {
            r.results.push_back({{"theory", "HH^"}, {"degree", n}, {"dim", nullptr}});
            r.evidence.push_back(e.what());
            r.text.push_back("HH^" + std::to_string(n) + "(A,A) = ? (needs a larger --max-weight)");
            escalate(r, kInconclusive);
        }
    }
    finish_plain(r);
    return r;
}

Report cmd_deform(const AlgebraSpec& s, const ComplexWindow& win)
{
    Report r;
    if (!s.deformation) throw SpecError("/deformation", "the deform command needs a deformation block");
    const FormalDeformation& d = *s.deformation;
    const BasisInfo b = s.algebra.basis();
    if (auto f = d.first_mc_failure()) {
        r.text.push_back("the given terms fail the Maurer-Cartan equation at order " + std::to_string(*f));
        auto lines = cochain_lines(d.mc_defect(*f), b, "mc");
        r.text.insert(r.text.end(), lines.begin(), lines.end());
        r.results.push_back({{"mc_failure", *f}});
        set_status(r, kViolation, "violation");
        return r;
    }
    if (s.trace) {
        if (auto c = closedness_defect(d, *s.trace)) {
            r.text.push_back("the deformation is not closed for the given trace at order " + std::to_string(c->order));
            r.results.push_back({{"closedness_failure", c->order}});
            set_status(r, kViolation, "violation");
            return r;
        }
    }
    ObstructionReport o = obstruction_class(d, s.trace, win);
    json j{{"order", o.order}, {"rhs", cochain_json(o.rhs, b)}, {"rhs_closed", o.rhs_closed}, {"exact", o.exact},
           {"unobstructed", o.unobstructed()}, {"witness_mc", o.witness_mc}, {"witness_closed", o.witness_closed}};
    if (o.cyclic) j["cyclic"] = {{"cocycle", o.cyclic->cocycle}, {"coboundary", o.cyclic->coboundary}};
    if (o.witness) j["witness"] = cochain_json(*o.witness, b);
    r.results.push_back(j);
    r.text.push_back("extending a deformation of order " + std::to_string(o.order) + " to order " + std::to_string(o.order + 1));
    r.text.push_back(std::string("obstruction cochain ") + (o.rhs.is_zero() ? "is zero" : "is nonzero") + ", " +
                     (o.rhs_closed ? "closed" : "NOT closed") + ", class in H^3(A,A) " + (o.exact ? "vanishes" : "is nonzero"));
    if (o.cyclic)
        r.text.push_back(std::string("paired with the trace: ") + (o.cyclic->cocycle ? "cocycle" : "NOT a cocycle") + ", " +
                         (o.cyclic->coboundary ? "coboundary" : "not a coboundary"));
    if (o.witness) {
        r.text.push_back("witness for the next term:");
        auto lines = cochain_lines(*o.witness, b, "m'");
        if (lines.empty()) lines.push_back("  0");
        r.text.insert(r.text.end(), lines.begin(), lines.end());
        r.text.push_back(std::string("witness Maurer-Cartan check: ") + (o.witness_mc ? "passes" : "FAILS"));
        if (s.trace) r.text.push_back(std::string("witness closedness check: ") + (o.witness_closed ? "passes" : "FAILS"));
        if (!o.witness_mc || (s.trace && !o.witness_closed)) escalate(r, kViolation);
    } else {
        r.text.push_back("obstructed: no next term exists");
    }
    if (!o.rhs_closed) escalate(r, kViolation);
    r.evidence.insert(r.evidence.end(), o.notes.begin(), o.notes.end());
    finish_plain(r);
    return r;
}

Report cmd_cor42(const AlgebraSpec& s, const ComplexWindow& win, const Options& opt)
{
    Report r;
    const AInfinityAlgebra& a = s.algebra;
    std::vector<NamedCochain> ds = s.derivations;
    ds.push_back({"m", a.m});
    CyclicHomology h(a, win);
    const int maxdeg = range_of(opt, win.reliable_bound()).second;
    bool violated = false, inconclusive = false;
    for (const auto& d : ds) {
        DerivationCheck dc = is_derivation(d.cochain, a);
        if (!dc.ok) {
            r.text.push_back(d.name + ": not a derivation, skipped (witness " + format_word(dc.witness, a.basis().label) + ")");
            r.results.push_back({{"derivation", d.name}, {"is_derivation", false}});
            continue;
        }
        LieReport lr = lie_derivative_report(h, d.cochain, maxdeg);
        json hc = json::array();
        for (std::size_t i = 0; i < lr.hc_degrees.size(); ++i) hc.push_back({{"degree", lr.hc_degrees[i]}, {"rank", lr.hc_ranks[i]}});
        json hp = json::array();
        for (std::size_t i = 0; i < lr.hp_parities.size(); ++i)
            hp.push_back({{"parity", lr.hp_parities[i]}, {"rank", lr.hp_ranks[i] < 0 ? json(nullptr) : json(lr.hp_ranks[i])},
                          {"stabilized", static_cast<bool>(lr.hp_stabilized[i])}});
        r.results.push_back({{"derivation", d.name}, {"is_derivation", true}, {"degree", lr.degree}, {"chain_map", lr.chain_map},
                             {"L_D_S_on_HC", hc}, {"L_D_on_HP", hp}});
        std::string hcs, hps;
        for (std::size_t i = 0; i < lr.hc_degrees.size(); ++i) hcs += " " + std::to_string(lr.hc_ranks[i]);
        for (std::size_t i = 0; i < lr.hp_parities.size(); ++i) hps += " " + (lr.hp_ranks[i] < 0 ? std::string("?") : std::to_string(lr.hp_ranks[i]));
        r.text.push_back(d.name + " (degree " + std::to_string(lr.degree) + "): rank L_D.S on HC_2.." + std::to_string(maxdeg) + ":" + hcs +
                         "; rank L_D on HP0, HP1:" + hps + (lr.chain_map ? "" : "; NOT a chain map"));
        for (const auto& n : lr.notes) r.evidence.push_back(d.name + ": " + n);
        if (!lr.chain_map || !lr.hc_zero() || !lr.hp_zero()) violated = true;
        if (!lr.conclusive()) inconclusive = true;
    }
    const std::string st = violated ? "FAIL" : inconclusive ? "INCONCLUSIVE" : "PASS";
    set_status(r, violated ? kViolation : inconclusive ? kInconclusive : kOk, st);
    return r;
}

Report cmd_sbi(const AlgebraSpec& s, const ComplexWindow& win, const Options& opt)
{
    Report r;
    CyclicHomology h(s.algebra, win);
    const int maxdeg = std::min(range_of(opt, 4).second, win.max_weight - 2);
    SbiReport sb = sbi_check(h, maxdeg);
    r.text.push_back(pad("node", 16) + pad("dim", 6) + pad("rank in", 9) + pad("rank out", 9) + "exact");
    for (const auto& n : sb.nodes) {
        r.results.push_back({{"node", n.name}, {"dim", n.dim}, {"rank_in", n.rank_in}, {"rank_out", n.rank_out}, {"exact", n.exact()}});
        r.text.push_back(pad(n.name, 16) + pad(std::to_string(n.dim), 6) + pad(std::to_string(n.rank_in), 9) +
                         pad(std::to_string(n.rank_out), 9) + (n.exact() ? "yes" : "NO"));
    }
    r.evidence.insert(r.evidence.end(), sb.notes.begin(), sb.notes.end());
    if (!sb.hh_matches) r.evidence.push_back("two-column homology differs from HH");
    set_status(r, sb.exact() ? kOk : kViolation, sb.exact() ? "PASS" : "FAIL");
    return r;
}

Report cmd_quasi_iso(const AlgebraSpec& s, const ComplexWindow& win, const Options& opt)
{
    Report r;
    CyclicHomology h(s.algebra, win);
    auto [lo, hi] = range_of(opt, win.reliable_bound());
    hi = std::min(hi, win.reliable_bound());
    bool ok = true;
    const bool unital = s.algebra.unit.has_value();
    r.text.push_back(pad("n", 4) + pad("Tot CC+", 9) + pad("C^lambda", 10) + (unital ? "(b,B)" : ""));
    for (int n = lo; n <= hi; ++n) {
        const int tot = h.hc(n);
        const int lam = h.hc_lambda(n);
        json j{{"degree", n}, {"tot", tot}, {"lambda", lam}};
        std::string line = pad(std::to_string(n), 4) + pad(std::to_string(tot), 9) + pad(std::to_string(lam), 10);
        if (tot != lam) ok = false;
        if (unital) {
            const int bb = h.hc_bB(n);
            j["bB"] = bb;
            line += std::to_string(bb);
            if (bb != tot) ok = false;
        }
        r.results.push_back(j);
        r.text.push_back(line);
    }
    set_status(r, ok ? kOk : kViolation, ok ? "PASS" : "FAIL");
    return r;
}

AInfinityIdeal positive_part(const AInfinityAlgebra& a)
{
    AInfinityIdeal i;
    const BasisInfo b = a.basis();
    for (int x = 0; x < b.size(); ++x)
        if (b.degree[static_cast<std::size_t>(x)] >= 1) i.span.push_back(SparseVec::unit(x));
    return i;
}

Report cmd_verify(const std::string& check, const AlgebraSpec& s, const ComplexWindow& win, const Options& opt)
{
    const AInfinityAlgebra& a = s.algebra;
    if (check == "prop23") {
        Report r;
        StrictMorphism f = s.morphism ? *s.morphism : quotient(a, degree_zero_ideal(a));
        r.evidence.push_back(s.morphism ? "morphism from the spec file" : "morphism A -> A/J killing Im(m1) in degree 0 and a complement");
        if (opt.conjecture) {
            TheoremReport t = conjecture_check_1connected(f, win);
            theorem_into(r, t);
            set_status(r, kOk, "EXPERIMENT");
            return r;
        }
        theorem_into(r, verify_prop23(f, win, range_of(opt, win.reliable_bound()).second));
        return r;
    }
    if (check == "thm44") {
        Report r;
        AInfinityIdeal i = positive_part(a);
        if (s.ideal) {
            i = ideal_closure(a, s.ideal->span);
            if (i.span.size() != s.ideal->span.size()) r.evidence.push_back("the given vectors were closed up to an ideal of dimension " + std::to_string(i.span.size()));
        } else {
            r.evidence.push_back("no ideal in the spec: using the positive-degree part");
        }
        theorem_into(r, verify_thm44(a, i, win));
        return r;
    }
    if (check == "thm45") {
        Report r;
        theorem_into(r, verify_thm45(a, win));
        return r;
    }
    if (check == "cor42") return cmd_cor42(s, win, opt);
    if (check == "sbi") return cmd_sbi(s, win, opt);
    if (check == "quasi-iso") return cmd_quasi_iso(s, win, opt);
    throw StructuralError("unknown verify target '" + check + "' (prop23, thm44, thm45, cor42, sbi, quasi-iso)");
}

}  // namespace

json Report::to_json() const
{
    return json{{"command", command}, {"window", window}, {"results", results}, {"evidence", evidence}, {"status", status}};
}

std::string Report::render(const std::string& format) const
{
    if (format == "json") return to_json().dump(2) + "\n";
    std::ostringstream os;
    for (const auto& l : text) os << l << "\n";
    for (const auto& e : evidence) os << "  " << e << "\n";
    os << "status: " << status << "\n";
    return os.str();
}

std::pair<int, int> parse_degrees(const std::string& s)
{
    const auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            const int n = std::stoi(s);
            return {n, n};
        }
        const int lo = std::stoi(s.substr(0, dots));
        const int hi = std::stoi(s.substr(dots + 2));
        if (lo > hi) throw StructuralError("empty degree range '" + s + "'");
        return {lo, hi};
    } catch (const std::invalid_argument&) {
        throw StructuralError("degree range must look like 2 or 1..4, got '" + s + "'");
    } catch (const std::out_of_range&) {
        throw StructuralError("degree range out of range: '" + s + "'");
    }
}

Report run(const std::string& command, const std::string& check, const std::string& spec_path, const Options& opt)
{
    Report r;
    const std::string name = command == "verify" ? "verify " + check : command;
    ComplexWindow win{opt.max_weight, opt.max_degree};
    json window{{"max_weight", opt.max_weight}, {"max_degree", opt.max_degree}, {"reliable_bound", win.reliable_bound()}};
    try {
        win.check();
        if (command == "validate") {
            r = cmd_validate(spec_path, opt);
        } else {
            AlgebraSpec s = load_spec(spec_path);
            win.check(s.algebra);
            if (command == "hh")
                r = cmd_homology("HH", s, win, opt);
            else if (command == "hc")
                r = cmd_homology("HC", s, win, opt);
            else if (command == "hp")
                r = cmd_hp(s, win, opt);
            else if (command == "traces")
                r = cmd_traces(s, win);
            else if (command == "bracket")
                r = cmd_bracket(s, opt);
            else if (command == "cohomology")
                r = cmd_cohomology(s, win, opt);
            else if (command == "deform")
                r = cmd_deform(s, win);
            else if (command == "verify")
                r = cmd_verify(check, s, win, opt);
            else
                throw StructuralError("unknown command '" + command + "'");
        }
    } catch (const WindowExceeded& e) {
        r = Report{};
        r.text.push_back(std::string("inconclusive: ") + e.what());
        r.evidence.push_back(e.what());
        set_status(r, kInconclusive, "inconclusive");
    } catch (const std::exception& e) {
        r = Report{};
        r.text.push_back(std::string("error: ") + e.what());
        r.evidence.push_back(e.what());
        set_status(r, kViolation, "error");
    }
    r.command = name;
    r.window = window;
    return r;
}

}  // namespace ainf::cli
