// jfrieze: command-line front end.
//
// Exit codes: 0 success, 1 a mathematical check failed, 2 bad input or usage.

#include "jfrieze/jfrieze.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

using namespace jfrieze;

namespace {

// Raised when a computation finishes with a negative mathematical verdict.
struct CheckFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Json read_json(const std::string& path) { return parse_json_text(read_text(path)); }

JugglingFunction siteswap_arg(const std::string& text) {
    try {
        return parse_siteswap(text);
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

std::string set_text(const std::vector<long>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
}

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

// Matrix must be pi-unimodular; the certificate goes to stderr otherwise.
void require_unimodular(const Matrix& A, const JugglingFunction& pi) {
    try {
        require_dimensions(A, pi);
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
    auto cert = is_pi_unimodular(A, pi);
    if (!cert.ok()) {
        std::cerr << to_json(cert).dump(2) << '\n';
        throw CheckFailed("matrix is not " + format_siteswap(pi) + "-unimodular");
    }
}

int cmd_siteswap(const std::string& pattern, bool as_json) {
    auto pi = siteswap_arg(pattern);
    auto cls = classify(pi);
    auto neck = necklace(pi);
    if (as_json) {
        Json j = to_json(pi);
        j["values"] = pi.values();
        j["balls"] = pi.balls();
        j["dual"] = format_siteswap(dual(pi));
        j["loops"] = cls.loops;
        j["coloops"] = cls.coloops;
        j["necklace"] = neck;
        print_json(j);
        return 0;
    }
    auto list = [](const std::vector<long>& v) {
        if (v.empty()) return std::string("none");
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
        return s;
    };
    std::cout << "siteswap: " << format_siteswap(pi) << '\n'
              << "period: " << pi.period() << '\n'
              << "values: " << list(pi.values()) << '\n'
              << "balls: " << pi.balls() << '\n'
              << "dual: " << format_siteswap(dual(pi)) << '\n'
              << "loops: " << list(cls.loops) << '\n'
              << "coloops: " << list(cls.coloops) << '\n'
              << "landing schedules:\n";
    for (long a = 1; a <= pi.period(); ++a) std::cout << "  L_" << a << " = " << set_text(neck[a - 1]) << '\n';
    return 0;
}

int cmd_check(const std::string& path, unsigned jobs) {
    auto C = frieze_from_json(read_json(path));
    auto report = check_frieze(C, jobs);
    Json j;
    j["siteswap"] = format_siteswap(C.shape());
    Json r = to_json(report);
    for (auto it = r.begin(); it != r.end(); ++it) j[it.key()] = it.value();
    j["positive"] = report.prefrieze_ok && is_positive(C);
    j["positions"] = "failures are reported with a in [1, n] and b in [a, a + n - 1]";
    print_json(j);
    return report.is_frieze() ? 0 : 1;
}

int cmd_construct(const std::string& path, const std::string& pattern, const std::string& method, bool verify) {
    auto A = matrix_from_json(read_json(path));
    auto pi = siteswap_arg(pattern);
    require_unimodular(A, pi);
    auto C = method == "twist" ? build_frieze_twist(A, pi) : build_frieze_det(A, pi);
    if (verify) {
        auto other = method == "twist" ? build_frieze_det(A, pi) : build_frieze_twist(A, pi);
        if (!(other == C)) throw CheckFailed("determinant and twist constructions disagree");
        if (!is_frieze(C)) throw CheckFailed("constructed strip fails the frieze conditions");
    }
    print_json(to_json(C));
    return 0;
}

int cmd_transform(const std::string& path, const std::string& op, const std::string& pattern) {
    Json in = read_json(path);
    if (op == "dual") {
        auto C = frieze_from_json(in);
        if (!is_prefrieze(C)) throw CheckFailed("input is not a prefrieze of its shape");
        print_json(to_json(dual_frieze(C)));
        return 0;
    }
    if (op == "invert-F") {
        auto C = frieze_from_json(in);
        if (!is_frieze(C)) throw CheckFailed("input is not a frieze");
        Matrix A = frieze_to_matrix(C);
        Json j;
        j["siteswap"] = format_siteswap(dual(C.shape()));
        j["matrix"] = to_json(A);
        print_json(j);
        return 0;
    }
    Matrix A = matrix_from_json(in);
    if (op == "complement") {
        if (A.rows() > A.cols() || rank(A) < A.rows()) throw CheckFailed("matrix does not have full row rank");
        print_json(to_json(positive_complement(A)));
        return 0;
    }
    if (pattern.empty()) throw FormatError("--op " + op + " needs --siteswap");
    auto pi = siteswap_arg(pattern);
    require_unimodular(A, pi);
    print_json(to_json(op == "twist" ? twist(A, pi) : inverse_twist(A, pi)));
    return 0;
}

int cmd_solve(const std::string& path, long basis) {
    auto C = frieze_from_json(read_json(path));
    if (!is_frieze(C)) throw CheckFailed("input is not a frieze");
    auto W = solution_matrix(C);
    if (basis == 0) {
        print_json(to_json(W));
        return 0;
    }
    const auto& pi = C.shape();
    long n = C.period();
    long a = residue(basis, n);
    auto L = landing_schedule(pi, a);
    Json j;
    j["a"] = a;
    if (a != basis) j["reduced_from"] = basis;
    j["schedule"] = L;
    j["sign_exponent"] = W.sign_exponent;
    j["rank"] = rank(schedule_block(W, pi, a));
    Json cols = Json::object();
    for (long b : L) {
        Json col = Json::array();
        for (long x = a; x < a + n; ++x) col.push_back(to_string(W.at(x, b)));
        cols[std::to_string(b)] = col;
    }
    j["rows"] = Json::array({a, a + n - 1});
    j["columns"] = cols;
    print_json(j);
    return 0;
}

int cmd_render(const std::string& path, long periods) {
    auto C = frieze_from_json(read_json(path));
    if (periods < 1) throw FormatError("--periods must be positive");
    std::cout << render_ascii(C, periods);
    return 0;
}

int cmd_enumerate(long height, long bound, bool dump) {
    if (height < 1) throw FormatError("--height must be at least 1");
    if (bound < 1) throw FormatError("--bound must be positive");
    auto fs = enumerate_sl2_positive(height, bound);
    std::cout << "height " << height << ", entry bound " << bound << ": " << fs.size() << " friezes\n";
    if (dump)
        for (const auto& C : fs) {
            std::string q;
            for (long b = 1; b <= C.period(); ++b) q += (b > 1 ? " " : "") + to_string(C.entry(b + 1, b));
            std::cout << "quiddity " << q << '\n' << render_ascii(C, 1);
        }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Juggler's friezes: construction, checking and rendering"};
    app.require_subcommand(1);

    std::string pattern, path, method = "det", op, frieze_site;
    bool as_json = false, verify = false, dump = false;
    unsigned jobs = 1;
    long basis = 0, periods = 2, height = 0, bound = 0;

    auto* s_sw = app.add_subcommand("siteswap", "Describe a juggling pattern");
    s_sw->add_option("pattern", pattern, "Siteswap, digits or comma-separated throws")->required();
    s_sw->add_flag("--json", as_json, "Emit JSON instead of text");

    auto* s_check = app.add_subcommand("check", "Check the frieze conditions of a frieze JSON file");
    s_check->add_option("frieze", path, "Frieze JSON ('-' for stdin)")->required();
    s_check->add_option("--jobs", jobs, "Worker threads for the diamond checks")->check(CLI::Range(1u, 256u));

    auto* s_con = app.add_subcommand("construct", "Build F(A) from a pi-unimodular matrix");
    s_con->add_option("matrix", path, "Matrix JSON ('-' for stdin)")->required();
    s_con->add_option("--siteswap", pattern, "Juggling pattern pi of the matrix")->required();
    s_con->add_option("--method", method, "det or twist")->check(CLI::IsMember({"det", "twist"}));
    s_con->add_flag("--verify", verify, "Cross-check both constructions and the frieze conditions");

    auto* s_tr = app.add_subcommand("transform", "Apply a transform to a matrix or frieze");
    s_tr->add_option("input", path, "Matrix or frieze JSON ('-' for stdin)")->required();
    s_tr->add_option("--op", op, "twist, inverse-twist, complement, dual or invert-F")
        ->required()
        ->check(CLI::IsMember({"twist", "inverse-twist", "complement", "dual", "invert-F"}));
    s_tr->add_option("--siteswap", frieze_site, "Juggling pattern of the input matrix (twist, inverse-twist)");

    auto* s_solve = app.add_subcommand("solve", "Solution matrix of C x = 0");
    s_solve->add_option("frieze", path, "Frieze JSON ('-' for stdin)")->required();
    s_solve->add_option("--basis", basis, "Emit the basis indexed by the landing schedule L_a");

    auto* s_render = app.add_subcommand("render", "ASCII diamond strip");
    s_render->add_option("frieze", path, "Frieze JSON ('-' for stdin)")->required();
    s_render->add_option("--periods", periods, "Number of periods to draw");

    auto* s_enum = app.add_subcommand("enumerate", "Positive integral SL(2)-friezes of a given height");
    s_enum->add_option("--height", height, "Height h")->required();
    s_enum->add_option("--bound", bound, "Largest second-row entry to try (default h + 2)");
    s_enum->add_flag("--dump", dump, "Print every frieze");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*s_sw) return cmd_siteswap(pattern, as_json);
        if (*s_check) return cmd_check(path, jobs);
        if (*s_con) return cmd_construct(path, pattern, method, verify);
        if (*s_tr) return cmd_transform(path, op, frieze_site);
        if (*s_solve) return cmd_solve(path, basis);
        if (*s_render) return cmd_render(path, periods);
        if (*s_enum) return cmd_enumerate(height, bound ? bound : height + 2, dump);
    } catch (const CheckFailed& e) {
        std::cerr << "check failed: " << e.what() << '\n';
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "check failed: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
