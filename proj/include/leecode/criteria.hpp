#pragma once

// Non-existence certificates for linear perfect Lee codes and lattice tilings,
// the classification of Zhang-Ge sets, and residue-class scanners.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "leecode/exactarith.hpp"
#include "leecode/leeball.hpp"

namespace leecode::criteria {

enum class CertificateKind { ZhangGe, PCondition, GeneralTiling };
enum class Verdict { NonExistence, Inconclusive };

std::string to_string(CertificateKind k);
std::string to_string(Verdict v);

/// One recorded quantity: its exact value, and (when a congruence is involved)
/// the modulus, the residue and the requirement it was tested against.
struct Evidence {
    std::string quantity;  // e.g. "k(12,3)"
    Integer value;
    std::optional<Integer> modulus;
    Integer residue;
    std::string requirement;  // e.g. "3 or 6", "non-zero"
    bool holds = false;
};

struct Subject {
    std::optional<long> n;
    std::optional<long> e;
    std::string description;  // "(n,e) = (12,3)" or a point-set summary
};

struct Certificate {
    CertificateKind kind = CertificateKind::ZhangGe;
    unsigned prime = 3;
    Subject subject;
    std::vector<Evidence> evidence;
    Verdict verdict = Verdict::Inconclusive;
    std::string reason;  // why the verdict is inconclusive, empty otherwise

    bool nonexistence() const { return verdict == Verdict::NonExistence; }
    std::string to_text() const;
    nlohmann::ordered_json to_json() const;
};

/// k(n,e) = 3 or 6 (mod 9) and p(n,e) = 0 (mod 3).
Certificate zhang_ge_condition(long n, long e);

/// Every n in [1, n_max] with (n,e) satisfying the Zhang-Ge condition.
std::vector<long> zg_members(long e, long n_max);

struct Witness {
    long n0 = 0;
    unsigned exponent = 0;  // the class is n0 + 3^exponent * N
    Integer modulus;
};

struct ZGClassification {
    enum class Status { Empty, Infinite };

    Status status = Status::Empty;
    ball::Delta3Value delta3 = ball::Delta3Value::infinite();
    std::string reason;
    std::optional<Witness> witness;

    nlohmann::ordered_json to_json() const;
    std::string to_text() const;
};

/// Empty when delta3(e) is 0 or infinite; otherwise infinite with an explicit
/// residue class of dimensions inside ZG(e).
ZGClassification zg_classify(long e);

/// The p-condition of non-existence for an odd prime p:
/// k(n,e) = tp (mod p^2) with 1 <= t < p, p_i(n,e) != 0 (mod p) for
/// 1 <= i < (p-1)/2, and p_{(p-1)/2}(n,e) = 0 (mod p).
/// Throws std::invalid_argument unless p is an odd prime.
Certificate pk_condition(long n, long e, unsigned p);

/// Lattice-tiling obstruction for an arbitrary point set: regularity,
/// |B| = pm with p not dividing m, p_k(B) != 0 (mod p) for k < (p-1)/2 and
/// p_{(p-1)/2}(B) = 0 (mod p).
Certificate general_tiling_criterion(const ball::PointSet& b, unsigned p);

class NotAPeriod : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Residues r in [0, modulus) whose class satisfies the p-condition. Each
/// residue is evaluated at its three smallest positive representatives; if they
/// disagree the modulus is not a period and NotAPeriod is thrown.
std::vector<long> residue_scan(long e, unsigned p, long modulus);

enum class ReproCase { Prop5, Prop6, Prop7, Prop8, Lemma7, Example5, Prop16, Prop17 };

std::vector<ReproCase> all_repro_cases();
std::string to_string(ReproCase c);
ReproCase parse_repro_case(const std::string& name);

struct Claim {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ReproReport {
    ReproCase which = ReproCase::Prop5;
    std::vector<Claim> claims;

    bool pass() const;
    std::string to_text() const;
    nlohmann::ordered_json to_json() const;
};

ReproReport reproduce(ReproCase c);

/// eta(a,b,c) = [1,1 ; a,b] [1 ; b]^-1 [1,0 ; b,c] modulo 9 (p = 3).
unsigned long lemma7_eta(unsigned a, unsigned b, unsigned c);

/// 1 - 3C(t,3) + 3C(t,6) - 4C(t,9) + 6C(t,18) - 4C(t,27) + 3C(t,30) - 3C(t,33) + C(t,36), mod 9.
unsigned long prop8_f(long t);

}  // namespace leecode::criteria
