#include "leecode/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "leecode/criteria.hpp"
#include "leecode/leeball.hpp"
#include "leecode/partitions.hpp"
#include "leecode/qpoly.hpp"

namespace leecode::cli {

namespace {

using json = nlohmann::ordered_json;

// Failure of an assertion the subcommand makes (as opposed to a usage error).
class AssertionFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Report {
    explicit Report(std::string cmd = {}) : command(std::move(cmd)) {}

    std::string command;
    json inputs = json::object();
    json results = json::object();
    std::string status = "value-only";  // pass | fail | value-only
    std::string text;

    int exit_code() const { return status == "fail" ? exit_fail : exit_ok; }
};

struct Options {
    std::string format = "text";
    std::size_t max_points = ball::default_max_points;
    bool timing = false;

    long n = 0, e = 0, k = 0, max = 0, modulus = 0;
    unsigned p = 0;
    std::string quantity, partition, norm = "1", points_file, big_e, which;
    std::vector<long> lee;
};

std::string list_text(const std::vector<long>& v)
{
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? ", " : "") << v[i];
    os << '}';
    return os.str();
}

std::string nk(const char* name, long n, long e)
{
    return std::string(name) + "(" + std::to_string(n) + "," + std::to_string(e) + ")";
}

ball::PointSet read_points(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open point file '" + path + "'");
    return ball::PointSet::parse(in);
}

Integer parse_integer(const std::string& s)
{
    Integer v;
    if (s.empty() || v.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed integer '" + s + "'");
    return v;
}

void certificate_report(Report& r, const criteria::Certificate& c)
{
    r.results = c.to_json();
    r.status = c.nonexistence() ? "pass" : "fail";
    r.text = c.to_text();
}

Report ball_size(const Options& o)
{
    Report r{"ball-size"};
    r.inputs = {{"n", o.n}, {"e", o.e}};
    const auto k = ball::lee_ball_size(o.n, o.e);
    r.results["value"] = k.get_str();
    r.text = nk("k", o.n, o.e) + " = " + k.get_str();
    return r;
}

Report ball_poly_e(const Options& o)
{
    if (o.n < 0)
        throw std::invalid_argument("ball-poly-e: n must be non-negative");
    Report r{"ball-poly-e"};
    r.inputs = {{"n", o.n}};
    const auto f = ball::scaled_size_polynomial_in_e(static_cast<int>(o.n));
    r.results["scale"] = arith::factorial(static_cast<unsigned long>(o.n)).get_str();
    r.results["polynomial"] = f.to_json();
    r.text = std::to_string(o.n) + "!·k(" + std::to_string(o.n) + ",e) = " + f.to_string();
    return r;
}

Report poly_n(const Options& o)
{
    Report r{"poly-n"};
    r.inputs = {{"q", o.quantity}, {"e", o.e}};
    const auto q = ball::parse_quantity(o.quantity);
    if (o.e < 1)
        throw std::invalid_argument("poly-n: e must be positive");
    const auto sp = ball::polynomial_in_n(q, static_cast<int>(o.e));
    r.results["scale"] = sp.scale.get_str();
    r.results["polynomial"] = sp.poly.to_json();
    r.text = sp.scale.get_str() + "·" + ball::to_string(q) + "(n," + std::to_string(o.e) + ") = " + sp.poly.to_string();
    return r;
}

Report p1(const Options& o)
{
    Report r{"p1"};
    r.inputs = {{"n", o.n}, {"e", o.e}};
    const auto v = ball::p1(o.n, o.e);
    r.results["value"] = v.get_str();
    r.text = nk("p", o.n, o.e) + " = " + v.get_str();
    return r;
}

Report pk(const Options& o)
{
    Report r{"pk"};
    r.inputs = {{"k", o.k}, {"n", o.n}, {"e", o.e}};
    const auto v = qpoly::pk_lee(static_cast<int>(o.k), o.n, o.e);
    r.results["value"] = v.get_str();
    r.text = nk(("p_" + std::to_string(o.k)).c_str(), o.n, o.e) + " = " + v.get_str();
    return r;
}

Report moment(const Options& o)
{
    Report r{"moment"};
    r.inputs = {{"n", o.n}, {"e", o.e}, {"j", o.partition}};
    const auto j = partitions::IntPartition::parse(o.partition);
    if (j.empty())
        throw std::invalid_argument("moment: empty partition");
    const auto v = qpoly::lee_moment_sum(o.n, o.e, j);
    r.results["value"] = v.get_str();
    r.text = "sum over B^" + std::to_string(o.n) + "(" + std::to_string(o.e) + ") of b^2(" + j.to_string() +
             ") = " + v.get_str();
    return r;
}

Report enumerate(const Options& o)
{
    Report r{"enumerate"};
    const auto norm = ball::Norm::parse(o.norm);
    r.inputs = {{"n", o.n}, {"e", o.e}, {"norm", norm.to_string()}};
    if (o.n < 1 || o.e < 0)
        throw std::invalid_argument("enumerate: need n >= 1 and e >= 0");
    const auto b = ball::enumerate_ball(static_cast<std::size_t>(o.n), o.e, norm, o.max_points);
    r.results["dim"] = b.dim();
    r.results["size"] = b.size();
    r.results["points"] = b.to_json();
    r.text = "# n=" + std::to_string(o.n) + " e=" + std::to_string(o.e) + " norm=" + norm.to_string() +
             " size=" + std::to_string(b.size()) + "\n" + b.to_text();
    if (!r.text.empty() && r.text.back() == '\n')
        r.text.pop_back();
    return r;
}

Report qpoly_cmd(const Options& o)
{
    Report r{"qpoly"};
    const bool lee = !o.lee.empty();
    const bool file = !o.points_file.empty();
    if (lee == file)
        throw std::invalid_argument("qpoly: give exactly one of --lee N E or --points FILE");
    ball::PointSet b;
    r.inputs["k"] = o.k;
    if (lee) {
        if (o.lee.size() != 2 || o.lee[0] < 1 || o.lee[1] < 0)
            throw std::invalid_argument("qpoly: --lee expects N >= 1 and E >= 0");
        r.inputs["lee"] = {{"n", o.lee[0]}, {"e", o.lee[1]}};
        b = ball::enumerate_ball(static_cast<std::size_t>(o.lee[0]), o.lee[1], ball::Norm::lp(1), o.max_points);
    } else {
        r.inputs["points"] = o.points_file;
        b = read_points(o.points_file);
    }
    const auto q = qpoly::q_expansion(static_cast<int>(o.k), b);
    r.results = q.to_json();
    r.text = q.to_text();
    return r;
}

Report zg_check(const Options& o)
{
    Report r{"zg-check"};
    r.inputs = {{"n", o.n}, {"e", o.e}};
    certificate_report(r, criteria::zhang_ge_condition(o.n, o.e));
    return r;
}

Report zg_scan(const Options& o)
{
    Report r{"zg-scan"};
    r.inputs = {{"e", o.e}, {"max", o.max}};
    const auto members = criteria::zg_members(o.e, o.max);
    r.results["members"] = members;
    r.results["count"] = members.size();
    r.text = "ZG(" + std::to_string(o.e) + ") ∩ [1," + std::to_string(o.max) + "] = " + list_text(members);
    return r;
}

Report classify(const Options& o)
{
    Report r{"classify"};
    r.inputs = {{"e", o.e}};
    const auto c = criteria::zg_classify(o.e);
    r.results = c.to_json();
    r.text = c.to_text();
    return r;
}

Report p_condition(const Options& o)
{
    Report r{"p-condition"};
    r.inputs = {{"n", o.n}, {"e", o.e}, {"p", o.p}};
    certificate_report(r, criteria::pk_condition(o.n, o.e, o.p));
    return r;
}

Report tiling_check(const Options& o)
{
    Report r{"tiling-check"};
    r.inputs = {{"points", o.points_file}, {"p", o.p}};
    certificate_report(r, criteria::general_tiling_criterion(read_points(o.points_file), o.p));
    return r;
}

Report scan(const Options& o)
{
    Report r{"scan"};
    r.inputs = {{"e", o.e}, {"p", o.p}, {"modulus", o.modulus}};
    std::vector<long> residues;
    try {
        residues = criteria::residue_scan(o.e, o.p, o.modulus);
    } catch (const criteria::NotAPeriod& ex) {
        throw AssertionFailure(ex.what());
    }
    r.results["residues"] = residues;
    r.results["count"] = residues.size();
    r.text = "n mod " + std::to_string(o.modulus) + " ∈ " + list_text(residues);
    return r;
}

Report delta3(const Options& o)
{
    Report r{"delta3"};
    r.inputs = {{"e", o.big_e}};
    const auto d = ball::delta3(parse_integer(o.big_e));
    r.results["delta3"] = d.to_string();
    r.text = "delta3(" + o.big_e + ") = " + d.to_string();
    return r;
}

Report reproduce(const Options& o)
{
    Report r{"reproduce"};
    r.inputs = {{"case", o.which}};
    std::vector<criteria::ReproCase> cases;
    if (o.which == "all")
        cases = criteria::all_repro_cases();
    else
        cases.push_back(criteria::parse_repro_case(o.which));
    bool ok = true;
    auto arr = json::array();
    std::string text;
    for (auto c : cases) {
        const auto rep = criteria::reproduce(c);
        ok = ok && rep.pass();
        arr.push_back(rep.to_json());
        text += (text.empty() ? "" : "\n") + rep.to_text();
    }
    r.results["cases"] = std::move(arr);
    r.status = ok ? "pass" : "fail";
    r.text = std::move(text);
    return r;
}

using Handler = std::function<Report(const Options&)>;

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Exact invariants of Lee balls and non-existence certificates for perfect Lee codes", "leecode"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--max-points", o.max_points, "Cap on enumerated points")->check(CLI::PositiveNumber);
    app.add_flag("--timing", o.timing, "Report elapsed time");

    std::map<CLI::App*, Handler> handlers;
    auto sub = [&](const char* name, const char* desc, Handler h) {
        auto* s = app.add_subcommand(name, desc);
        handlers[s] = std::move(h);
        return s;
    };
    auto need_n = [&](CLI::App* s) { s->add_option("-n", o.n, "Dimension")->required(); };
    auto need_e = [&](CLI::App* s) { s->add_option("-e", o.e, "Radius")->required(); };
    auto need_p = [&](CLI::App* s) { s->add_option("-p", o.p, "Odd prime")->required(); };

    auto* s = sub("ball-size", "k(n,e), the size of the Lee ball", ball_size);
    need_n(s);
    need_e(s);
    s = sub("ball-poly-e", "n! k(n,e) as a polynomial in e", ball_poly_e);
    need_n(s);
    s = sub("poly-n", "k, p1 or p2 at fixed e as a polynomial in n", poly_n);
    s->add_option("-q", o.quantity, "k, p1 or p2")->required()->check(CLI::IsMember({"k", "p1", "p2"}));
    need_e(s);
    s = sub("p1", "p(n,e) = p_1(n,e)", p1);
    need_n(s);
    need_e(s);
    s = sub("pk", "p_k(n,e) for the Lee ball", pk);
    s->add_option("-k", o.k, "Order")->required();
    need_n(s);
    need_e(s);
    s = sub("moment", "sum of b^2j over the Lee ball", moment);
    need_n(s);
    need_e(s);
    s->add_option("-j", o.partition, "Partition, e.g. 2,1")->required();
    s = sub("enumerate", "points of an l_p ball", enumerate);
    need_n(s);
    need_e(s);
    s->add_option("--norm", o.norm, "1, 2, ... or inf");
    s = sub("qpoly", "power-sum expansion of the Q-polynomial", qpoly_cmd);
    s->add_option("-k", o.k, "Order")->required();
    auto* lee = s->add_option("--lee", o.lee, "Lee ball B^N(E)")->expected(2);
    s->add_option("--points", o.points_file, "Point-set file")->excludes(lee);
    s = sub("zg-check", "Zhang-Ge condition for (n,e)", zg_check);
    need_n(s);
    need_e(s);
    s = sub("zg-scan", "dimensions n <= max in ZG(e)", zg_scan);
    need_e(s);
    s->add_option("--max", o.max, "Largest dimension")->required();
    s = sub("classify", "emptiness of ZG(e), with a witness class", classify);
    need_e(s);
    s = sub("p-condition", "p-condition of non-existence for (n,e)", p_condition);
    need_n(s);
    need_e(s);
    need_p(s);
    s = sub("tiling-check", "lattice-tiling criterion for a point set", tiling_check);
    s->add_option("--points", o.points_file, "Point-set file")->required();
    need_p(s);
    s = sub("scan", "residues n mod M satisfying the p-condition", scan);
    need_e(s);
    need_p(s);
    s->add_option("--modulus", o.modulus, "Period to scan")->required();
    s = sub("delta3", "highest base-3 digit equal to 1", delta3);
    s->add_option("-e", o.big_e, "Positive integer")->required();
    s = sub("reproduce", "re-run an appendix computation", reproduce);
    std::vector<std::string> cases{"all"};
    for (auto c : criteria::all_repro_cases())
        cases.push_back(criteria::to_string(c));
    s->add_option("case", o.which, "Case name or all")->required()->check(CLI::IsMember(cases));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    CLI::App* chosen = app.get_subcommands().front();
    const auto start = std::chrono::steady_clock::now();
    Report r;
    try {
        r = handlers.at(chosen)(o);
    } catch (const AssertionFailure& e) {
        err << "error: " << e.what() << '\n';
        return exit_fail;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    const auto elapsed =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    std::ostringstream buf;
    if (o.format == "json") {
        json j;
        j["command"] = r.command;
        j["inputs"] = r.inputs;
        j["results"] = r.results;
        j["status"] = r.status;
        if (o.timing)
            j["elapsed_ms"] = elapsed;
        buf << j.dump(2) << '\n';
    } else {
        buf << r.text << '\n';
        if (r.status != "value-only")
            buf << "status: " << r.status << '\n';
        if (o.timing)
            buf << "elapsed: " << elapsed << " ms\n";
    }
    out << buf.str();
    return r.exit_code();
}

}  // namespace leecode::cli
