#include "leecode/criteria.hpp"

#include <sstream>

#include "leecode/qpoly.hpp"

namespace leecode::criteria {

using arith::mod;

std::string to_string(CertificateKind k)
{
    switch (k) {
    case CertificateKind::ZhangGe:
        return "ZhangGe";
    case CertificateKind::PCondition:
        return "PCondition";
    case CertificateKind::GeneralTiling:
        return "GeneralTiling";
    }
    return "?";
}

std::string to_string(Verdict v)
{
    return v == Verdict::NonExistence ? "NonExistence" : "Inconclusive";
}

namespace {

std::string pair_label(const std::string& name, long n, long e)
{
    return name + "(" + std::to_string(n) + "," + std::to_string(e) + ")";
}

Evidence congruence(std::string quantity, const Integer& value, const Integer& modulus, std::string requirement,
                    bool (*test)(const Integer& residue, const Integer& modulus))
{
    Evidence ev;
    ev.quantity = std::move(quantity);
    ev.value = value;
    ev.modulus = modulus;
    ev.residue = mod(value, modulus);
    ev.requirement = std::move(requirement);
    ev.holds = test(ev.residue, modulus);
    return ev;
}

bool is_zero(const Integer& r, const Integer&) { return sgn(r) == 0; }
bool is_nonzero(const Integer& r, const Integer&) { return sgn(r) != 0; }
bool is_zg_size(const Integer& r, const Integer&) { return r == 3 || r == 6; }

// r = tp (mod p^2) with 1 <= t < p, where the modulus passed is p^2
bool is_single_p(const Integer& r, const Integer& p2)
{
    if (sgn(r) == 0)
        return false;
    Integer p;
    mpz_sqrt(p.get_mpz_t(), p2.get_mpz_t());
    return mpz_divisible_p(r.get_mpz_t(), p.get_mpz_t()) != 0;
}

void require_odd_prime(unsigned p, const char* who)
{
    if (p < 3 || !arith::is_prime(p))
        throw std::invalid_argument(std::string(who) + ": " + std::to_string(p) + " is not an odd prime");
}

void settle(Certificate& c)
{
    c.verdict = Verdict::NonExistence;
    for (const auto& ev : c.evidence)
        if (!ev.holds) {
            c.verdict = Verdict::Inconclusive;
            if (c.reason.empty())
                c.reason = ev.quantity + " fails: requires " + ev.requirement;
        }
    if (c.verdict == Verdict::NonExistence)
        c.reason.clear();
}

bool zg_holds_fast(long n, long e)
{
    const Integer k = ball::lee_ball_size(n, e);
    const auto r9 = arith::mod_ui(k, 9);
    if (r9 != 3 && r9 != 6)
        return false;
    return arith::mod_ui(ball::p1(n, e), 3) == 0;
}

}  // namespace

std::string Certificate::to_text() const
{
    std::ostringstream os;
    os << to_string(kind);
    if (kind != CertificateKind::ZhangGe)
        os << " (p = " << prime << ")";
    os << " for " << subject.description << '\n';
    for (const auto& ev : evidence) {
        os << "  " << ev.quantity;
        if (ev.modulus)
            os << " = " << ev.value << " ≡ " << ev.residue << " (mod " << *ev.modulus << ")";
        else
            os << " = " << ev.value;
        os << "  [requires " << ev.requirement << "] " << (ev.holds ? "ok" : "FAILS") << '\n';
    }
    os << "verdict: " << to_string(verdict);
    if (!reason.empty())
        os << " (" << reason << ")";
    return os.str();
}

nlohmann::ordered_json Certificate::to_json() const
{
    nlohmann::ordered_json j;
    j["kind"] = to_string(kind);
    j["prime"] = prime;
    nlohmann::ordered_json subj;
    if (subject.n)
        subj["n"] = *subject.n;
    if (subject.e)
        subj["e"] = *subject.e;
    subj["description"] = subject.description;
    j["subject"] = std::move(subj);
    auto evs = nlohmann::ordered_json::array();
    for (const auto& ev : evidence) {
        nlohmann::ordered_json x;
        x["quantity"] = ev.quantity;
        x["value"] = ev.value.get_str();
        x["modulus"] = ev.modulus ? nlohmann::ordered_json(ev.modulus->get_str()) : nlohmann::ordered_json(nullptr);
        x["residue"] = ev.residue.get_str();
        x["requirement"] = ev.requirement;
        x["holds"] = ev.holds;
        evs.push_back(std::move(x));
    }
    j["evidence"] = std::move(evs);
    j["verdict"] = to_string(verdict);
    if (!reason.empty())
        j["reason"] = reason;
    return j;
}

Certificate zhang_ge_condition(long n, long e)
{
    if (n < 1 || e < 1)
        throw std::invalid_argument("zhang_ge_condition: n and e must be positive");
    Certificate c;
    c.kind = CertificateKind::ZhangGe;
    c.prime = 3;
    c.subject = {n, e, "(n,e) = (" + std::to_string(n) + "," + std::to_string(e) + ")"};
    c.evidence.push_back(congruence(pair_label("k", n, e), ball::lee_ball_size(n, e), 9, "3 or 6", is_zg_size));
    c.evidence.push_back(congruence(pair_label("p", n, e), ball::p1(n, e), 3, "0", is_zero));
    settle(c);
    return c;
}

std::vector<long> zg_members(long e, long n_max)
{
    if (e < 1)
        throw std::invalid_argument("zg_members: e must be positive");
    std::vector<long> out;
    for (long n = 1; n <= n_max; ++n)
        if (zg_holds_fast(n, e))
            out.push_back(n);
    return out;
}

nlohmann::ordered_json ZGClassification::to_json() const
{
    nlohmann::ordered_json j;
    j["status"] = status == Status::Empty ? "Empty" : "Infinite";
    j["delta3"] = delta3.to_string();
    j["reason"] = reason;
    if (witness) {
        nlohmann::ordered_json w;
        w["n0"] = witness->n0;
        w["exponent"] = witness->exponent;
        w["modulus"] = witness->modulus.get_str();
        j["witness"] = std::move(w);
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

std::string ZGClassification::to_text() const
{
    std::ostringstream os;
    os << "delta3 = " << delta3.to_string() << "; ZG(e) is "
       << (status == Status::Empty ? "empty" : "infinite") << " (" << reason << ")";
    if (witness)
        os << "\nwitness: n ≡ " << witness->n0 << " (mod 3^" << witness->exponent << " = " << witness->modulus
           << ")";
    return os.str();
}

ZGClassification zg_classify(long e)
{
    if (e < 1)
        throw std::invalid_argument("zg_classify: e must be positive");
    ZGClassification c;
    c.delta3 = ball::delta3(e);
    const auto digits = static_cast<unsigned>(arith::to_digits(e, 3).size());  // floor(log3 e) + 1

    if (!c.delta3.is_finite()) {
        c.status = ZGClassification::Status::Empty;
        c.reason = "no base-3 digit of e equals 1";
        return c;
    }
    const std::size_t d = c.delta3.index();
    if (d == 0) {
        c.status = ZGClassification::Status::Empty;
        c.reason = "the only base-3 digit 1 of e is the unit digit";
        return c;
    }

    c.status = ZGClassification::Status::Infinite;
    Witness w;
    if (d == 1) {
        if (e % 9 == 4) {
            w.n0 = 3;
            w.exponent = std::max(3U, digits);
            c.reason = "delta3(e) = 1 and e ≡ 4 (mod 9)";
        } else {
            w.n0 = 12;
            w.exponent = std::max(4U, digits);
            c.reason = "delta3(e) = 1 and e ≡ " + std::to_string(e % 9) + " (mod 9)";
        }
    } else if (d == 2) {
        w.n0 = 12;
        w.exponent = std::max(4U, digits);
        c.reason = "delta3(e) = 2";
    } else {
        const auto m = static_cast<unsigned>(d - 1);
        long pm = 1;
        for (unsigned i = 0; i < m; ++i)
            pm *= 3;
        w.n0 = 3 * pm + pm;
        w.exponent = std::max(m + 3, digits);
        c.reason = "delta3(e) = " + std::to_string(d) + " >= 3";
    }
    mpz_ui_pow_ui(w.modulus.get_mpz_t(), 3, w.exponent);
    c.witness = w;
    return c;
}

Certificate pk_condition(long n, long e, unsigned p)
{
    require_odd_prime(p, "pk_condition");
    if (n < 1 || e < 1)
        throw std::invalid_argument("pk_condition: n and e must be positive");
    Certificate c;
    c.kind = CertificateKind::PCondition;
    c.prime = p;
    c.subject = {n, e, "(n,e) = (" + std::to_string(n) + "," + std::to_string(e) + ")"};
    const Integer pz = p;
    c.evidence.push_back(congruence(pair_label("k", n, e), ball::lee_ball_size(n, e), pz * pz,
                                    "tp with 1 <= t < " + std::to_string(p), is_single_p));
    const int half = static_cast<int>((p - 1) / 2);
    for (int i = 1; i <= half; ++i) {
        const bool last = i == half;
        c.evidence.push_back(congruence(pair_label("p_" + std::to_string(i), n, e), qpoly::pk_lee(i, n, e), pz,
                                        last ? "0" : "non-zero", last ? is_zero : is_nonzero));
    }
    settle(c);
    return c;
}

Certificate general_tiling_criterion(const ball::PointSet& b, unsigned p)
{
    require_odd_prime(p, "general_tiling_criterion");
    if (b.empty())
        throw std::invalid_argument("general_tiling_criterion: empty point set");
    Certificate c;
    c.kind = CertificateKind::GeneralTiling;
    c.prime = p;
    c.subject.description = "point set of " + std::to_string(b.size()) + " points in Z^" + std::to_string(b.dim());

    const Integer pz = p;
    const Integer size = static_cast<unsigned long>(b.size());
    c.evidence.push_back(
        congruence("|B|", size, pz * pz, "tp with 1 <= t < " + std::to_string(p), is_single_p));

    const auto report = ball::regularity_report(b);
    Evidence reg;
    reg.quantity = "regular";
    reg.value = report.is_regular() ? 1 : 0;
    reg.residue = reg.value;
    reg.requirement = "symmetric and closed under coordinate permutations";
    reg.holds = report.is_regular();
    c.evidence.push_back(reg);
    if (!report.is_regular()) {
        c.verdict = Verdict::Inconclusive;
        c.reason = report.is_symmetric ? "point set is not closed under coordinate permutations"
                                       : "point set is not symmetric under negation";
        return c;
    }

    const int half = static_cast<int>((p - 1) / 2);
    for (int k = 1; k <= half; ++k) {
        const bool last = k == half;
        c.evidence.push_back(congruence("p_" + std::to_string(k) + "(B)", qpoly::pk_regular(k, b), pz,
                                        last ? "0" : "non-zero", last ? is_zero : is_nonzero));
    }
    settle(c);
    return c;
}

std::vector<long> residue_scan(long e, unsigned p, long modulus)
{
    require_odd_prime(p, "residue_scan");
    if (modulus < 1)
        throw std::invalid_argument("residue_scan: modulus must be positive");
    if (e < 1)
        throw std::invalid_argument("residue_scan: e must be positive");
    std::vector<long> out;
    for (long r = 0; r < modulus; ++r) {
        const long first = r == 0 ? modulus : r;
        const bool v0 = pk_condition(first, e, p).nonexistence();
        for (long t = 1; t <= 2; ++t) {
            const long rep = first + t * modulus;
            if (pk_condition(rep, e, p).nonexistence() != v0)
                throw NotAPeriod("residue_scan: " + std::to_string(modulus) + " is not a period of the " +
                                 std::to_string(p) + "-condition for e = " + std::to_string(e) + " (n = " +
                                 std::to_string(first) + " and n = " + std::to_string(rep) + " disagree)");
        }
        if (v0)
            out.push_back(r);
    }
    return out;
}

}  // namespace leecode::criteria
