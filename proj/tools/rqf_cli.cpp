// rqf: class numbers, zeta values and verification sweeps for Q(sqrt(9m^2 + 4m)).

#include "rqf/rqf.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json int_json(const rqf::Integer& n) {
    if (mpz_fits_slong_p(n.get_mpz_t())) return n.get_si();
    return n.get_str();
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

rqf::Integer parse_integer(const std::string& text, const char* what) {
    rqf::Integer n;
    if (text.empty() || n.set_str(text, 10) != 0) throw usage_error(std::string(what) + " is not an integer: '" + text + "'");
    return n;
}

// ---------------------------------------------------------------------------

struct TableOptions {
    long min = -160, max = 160;
    std::optional<int> mod3;
    std::string format = "csv";
    unsigned jobs = 1;
};

int cmd_table(const TableOptions& o) {
    if (o.min > o.max) throw usage_error("--min must not exceed --max");
    std::vector<long> ms;
    for (long m : rqf::detail::family_range(o.min, o.max)) {
        if (!o.mod3 || rqf::detail::mod3(m) == *o.mod3) ms.push_back(m);
    }
    const auto hs = rqf::parallel_map(ms, o.jobs, [](const long& m) { return rqf::class_number(rqf::QuadField::family(m)); });

    if (o.format == "json") {
        json rows = json::array();
        for (std::size_t i = 0; i < ms.size(); ++i) {
            rows.push_back({{"m", ms[i]}, {"D", int_json(9 * rqf::Integer(ms[i]) * ms[i] + 4 * ms[i])}, {"h", int_json(hs[i])}});
        }
        std::cout << rows.dump(2) << "\n";
    } else {
        std::cout << "m,D,h\n";
        for (std::size_t i = 0; i < ms.size(); ++i) {
            std::cout << ms[i] << "," << 9 * rqf::Integer(ms[i]) * ms[i] + 4 * ms[i] << "," << hs[i] << "\n";
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------

struct VerifyOptions {
    std::string suite;
    std::optional<long> min, max;
    std::string format = "csv";
    unsigned jobs = 1;
    std::string corpus = RQF_DEFAULT_CORPUS;
};

int cmd_verify(const VerifyOptions& o) {
    if (o.min && o.max && *o.min > *o.max) throw usage_error("--min must not exceed --max");
    if (o.suite == "props" || o.suite == "tables" || o.suite == "all") {
        try {
            (void)rqf::detail::load_corpus(o.corpus);
        } catch (const rqf::corpus_error& e) {
            throw usage_error(e.what());
        }
    }
    rqf::VerifyConfig cfg{o.min, o.max, o.jobs, o.corpus};
    const auto checks = rqf::run_suite(o.suite, cfg);
    const auto failed = static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const rqf::Check& c) { return !c.ok; }));

    if (o.format == "json") {
        json list = json::array();
        for (const auto& c : checks) {
            list.push_back({{"suite", c.suite}, {"group", c.group}, {"check", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"ok", c.ok}});
        }
        json report = {{"suite", o.suite}, {"total", checks.size()}, {"failed", failed}, {"ok", failed == 0}, {"checks", list}};
        std::cout << report.dump(2) << "\n";
    } else {
        std::cout << "suite,group,check,expected,actual,status\n";
        for (const auto& c : checks) {
            std::cout << csv_field(c.suite) << "," << csv_field(c.group) << "," << csv_field(c.name) << "," << csv_field(c.expected) << ","
                      << csv_field(c.actual) << "," << (c.ok ? "pass" : "FAIL") << "\n";
        }
        std::cout << "# " << o.suite << ": " << checks.size() << " checks, " << failed << " failed\n";
    }
    return failed == 0 ? 0 : kExitFail;
}

// ---------------------------------------------------------------------------

json partial_value(const std::string& cls, const rqf::IdealBasis& basis, const rqf::FundamentalUnit& eps) {
    return {{"class", cls}, {"ideal_norm", int_json(basis.norm)}, {"value", rqf::to_fraction_string(rqf::lang_partial_zeta(basis, eps))}};
}

int cmd_field(const std::optional<std::string>& m_text, const std::optional<std::string>& d_text) {
    std::optional<rqf::QuadField> field;
    try {
        field = m_text ? rqf::QuadField::family(parse_integer(*m_text, "--m")) : rqf::QuadField::from_d(parse_integer(*d_text, "--D"));
    } catch (const rqf::hypothesis_error& e) {
        throw usage_error(e.what());
    }
    const rqf::QuadField& k = *field;
    const rqf::FundamentalUnit eps = rqf::fundamental_unit(k);

    json out;
    out["D"] = int_json(k.d());
    out["m"] = k.is_family() ? int_json(k.family_m()) : json(nullptr);
    out["discriminant"] = int_json(k.discriminant());
    out["unit"] = {{"t", int_json(eps.t)},
                   {"u", int_json(eps.u)},
                   {"norm", eps.norm},
                   {"text", "(" + eps.t.get_str() + "+" + eps.u.get_str() + "*sqrt(" + k.d().get_str() + "))/2"}};
    out["h"] = int_json(rqf::class_number(k));
    out["h_plus"] = int_json(rqf::narrow_class_number(k.discriminant()));
    out["zeta_minus_1"] = k.d_is_1_mod_4() ? json(rqf::to_fraction_string(rqf::zagier_zeta(k))) : json(nullptr);
    out["rd_type"] = rqf::is_rd_type(k.d());

    std::vector<rqf::Integer> primes{3};
    for (const auto& p : rqf::prime_divisors(k.discriminant())) {
        if (p != 3) primes.push_back(p);
    }
    if (k.is_family()) {
        const rqf::Integer q = 9 * k.family_m() + 4;
        if (q > 3 && rqf::is_prime(q) && std::find(primes.begin(), primes.end(), q) == primes.end()) primes.push_back(q);
    }

    json partial = json::array();
    partial.push_back(partial_value("principal", rqf::unit_ideal_basis(k), eps));
    json splitting = json::array();
    for (const auto& p : primes) {
        const rqf::PrimeDecomposition dec = rqf::prime_splitting(k, p);
        splitting.push_back({{"p", int_json(p)}, {"type", rqf::to_string(dec.kind)}});
        if (dec.ideal) partial.push_back(partial_value("prime above " + p.get_str(), *dec.ideal, eps));
    }
    out["partial_zeta"] = partial;
    out["splitting"] = splitting;
    std::cout << out.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Class numbers, zeta values and verification sweeps for Q(sqrt(9m^2 + 4m))"};
    app.require_subcommand(1);
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());

    TableOptions table;
    table.jobs = hw;
    auto* table_cmd = app.add_subcommand("table", "class numbers for odd m in a range with D square-free");
    table_cmd->add_option("--min", table.min, "smallest m")->capture_default_str();
    table_cmd->add_option("--max", table.max, "largest m")->capture_default_str();
    table_cmd->add_option("--mod3", table.mod3, "keep only m with this residue mod 3")->check(CLI::IsMember({0, 1, 2}));
    table_cmd->add_option("--format", table.format, "output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    table_cmd->add_option("--jobs", table.jobs, "worker threads")->check(CLI::PositiveNumber);

    VerifyOptions verify;
    verify.jobs = hw;
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite; exit 0 iff every check passes");
    std::vector<std::string> suites = rqf::suite_names();
    suites.push_back("all");
    verify_cmd->add_option("suite", verify.suite, "suite name")->required()->check(CLI::IsMember(suites));
    verify_cmd->add_option("--min", verify.min, "lower end of the suite's range");
    verify_cmd->add_option("--max", verify.max, "upper end of the suite's range");
    verify_cmd->add_option("--format", verify.format, "report format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    verify_cmd->add_option("--jobs", verify.jobs, "worker threads")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--corpus", verify.corpus, "table corpus CSV (m,D,h)")->capture_default_str();

    std::optional<std::string> field_m, field_d;
    auto* field_cmd = app.add_subcommand("field", "JSON report for one field");
    auto* m_opt = field_cmd->add_option("--m", field_m, "family parameter m (D = 9m^2 + 4m)");
    auto* d_opt = field_cmd->add_option("--D", field_d, "square-free D >= 2");
    m_opt->excludes(d_opt);
    field_cmd->require_option(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*table_cmd) return cmd_table(table);
        if (*verify_cmd) return cmd_verify(verify);
        if (*field_cmd) return cmd_field(field_m, field_d);
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
