#include "dyckfact/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "dyckfact/json_io.hpp"
#include "dyckfact/render.hpp"

namespace dyckfact {

namespace {

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw domain_error("cannot open input file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct Options {
    std::string alpha, beta;
    std::string input_file, inline_json;
    std::string word;
    std::string lambda = "0";
    int m = 0, n = 0;
    std::string alpha1, alpha2; // multiquiver integer shifts
    int max_size = kDefaultMaxSize;
    bool ascii = false;

    ShiftPair shifts() const {
        if (alpha.empty() || beta.empty())
            throw CLI::ValidationError("--alpha and --beta are required for this command");
        Rat a = Rat::parse(alpha), b = Rat::parse(beta);
        if (a.is_zero() || b.is_zero())
            throw domain_error("degenerate shift pair: the solution set is " +
                               to_string(classify_degenerate(a, b)) +
                               " and is not enumerated");
        return ShiftPair::create(a, b);
    }

    Json input() const {
        if (!input_file.empty()) return parse_json(slurp(input_file));
        if (!inline_json.empty()) return parse_json(inline_json);
        throw CLI::ValidationError("provide --input FILE or --json STRING");
    }
};

void cmd_paths(const Options& opt, std::ostream& out) {
    auto ds = enumerate_dyck(opt.m, opt.n, opt.max_size);
    if (opt.ascii) {
        out << render_paths(ds);
        return;
    }
    Json arr = Json::array();
    for (const auto& d : ds) arr.push_back(to_json(d));
    out << dump(Json{{"m", opt.m}, {"n", opt.n}, {"count", ds.size()}, {"paths", std::move(arr)}});
}

void cmd_count(const Options& opt, std::ostream& out) {
    Int c = count_irr_orbits(Int(opt.m), Int(opt.n));
    Json v = c.fits_ulong_p() ? Json(c.get_ui()) : Json(c.get_str());
    out << dump(Json{{"dyck_paths", std::move(v)}});
}

void cmd_fundamental(const Options& opt, std::ostream& out) {
    ShiftPair sp = opt.shifts();
    Word w(opt.word);
    Rat lambda = Rat::parse(opt.lambda);
    SolutionPair base = fundamental_from_word(sp, w);
    SolutionPair pair{shift_poly(base.p1, -lambda), shift_poly(base.p2, -lambda)};
    out << dump(Json{{"word", w.str()},
                     {"lambda", to_json(lambda)},
                     {"p1", to_json(pair.p1)},
                     {"p2", to_json(pair.p2)}});
}

void cmd_verify(const Options& opt, std::ostream& out) {
    ShiftPair sp = opt.shifts();
    SolutionPair s = pair_from_json(opt.input());
    out << dump(Json{{"verified", verify(sp, s)}});
}

void cmd_factor(const Options& opt, std::ostream& out) {
    ShiftPair sp = opt.shifts();
    SolutionPair s = pair_from_json(opt.input());
    out << dump(to_json(canonical_factorization(sp, s)));
}

void cmd_product(const Options& opt, std::ostream& out) {
    ShiftPair sp = opt.shifts();
    Factorization f = factorization_from_json(opt.input());
    out << dump(to_json(f.reconstruct(sp)));
}

void cmd_multiquiver(const Options& opt, std::ostream& out) {
    if (opt.alpha1.empty() || opt.alpha2.empty())
        throw CLI::ValidationError("--alpha1 and --alpha2 are required");
    Rat a1 = Rat::parse(opt.alpha1), a2 = Rat::parse(opt.alpha2);
    if (!a1.is_integer() || !a2.is_integer())
        throw domain_error("multiquiver shifts must be integers");
    Factorization f = multiquiver_factorization(a1.num(), a2.num());
    out << dump(Json{{"solution", to_json(multiquiver_solution(a1.num(), a2.num()))},
                     {"factorization", to_json(f)}});
}

void cmd_orbit_rep(const Options& opt, std::ostream& out) {
    ShiftPair sp = opt.shifts();
    OrbitRep rep = canonical_orbit_rep(sp, Word(opt.word));
    out << dump(Json{{"shift", rep.shift}, {"word", rep.path.word().str()}});
}

void cmd_render(const Options& opt, std::ostream& out) {
    if (!opt.word.empty()) {
        out << render_path(DyckPath::from_word(Word(opt.word)));
        return;
    }
    if (!opt.input_file.empty() || !opt.inline_json.empty()) {
        Json j = opt.input();
        if (!j.is_object() || !j.contains("paths"))
            throw parse_error("cylinder input needs {\"paths\": [cylindrical path, ...]}");
        std::vector<CylPath> cs;
        for (const auto& e : j.at("paths")) cs.push_back(cyl_from_json(e));
        out << render_cylinder(cs);
        return;
    }
    if (opt.m > 0 && opt.n > 0) {
        out << render_paths(enumerate_dyck(opt.m, opt.n, opt.max_size));
        return;
    }
    throw CLI::ValidationError("render needs --word, --input/--json, or --m and --n");
}

} // namespace

void write_example_fixtures(const std::string& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    auto write = [&](const std::string& name, const Json& j) {
        std::ofstream out(fs::path(dir) / name, std::ios::binary);
        if (!out) throw domain_error("cannot write fixture '" + name + "'");
        out << dump(j);
    };

    ShiftPair sp23 = ShiftPair::create(Rat(2), Rat(-3));
    write("fundamental_21211.json", to_json(fundamental(
        sp23, DyckPath::from_word(Word("21211")), Rat(0))));

    ShiftPair sp53 = ShiftPair::create(Rat(5), Rat(-3));
    SolutionPair ex2 = fundamental_from_word(sp53, Word("11221222"));
    write("fundamental_11221222.json",
          Json{{"word", "11221222"}, {"p1", to_json(ex2.p1)}, {"p2", to_json(ex2.p2)}});

    // The two constructions of the same degree-10 solution whose ordered
    // factorization the factor command recovers.
    auto fshift = [&](const char* w, long lam) {
        SolutionPair base = fundamental_from_word(sp23, Word(w));
        return SolutionPair{shift_poly(base.p1, Rat(-lam)), shift_poly(base.p2, Rat(-lam))};
    };
    SolutionPair fg = mul(fshift("11122", 0), fshift("12211", 3));
    SolutionPair hk = mul(fshift("12112", 0), fshift("12112", 3));
    write("fg.json", to_json(fg));
    write("hk.json", to_json(hk));

    write("multiquiver_-4_6.json", Json{{"solution", to_json(multiquiver_solution(-4, 6))},
                                        {"factorization", to_json(multiquiver_factorization(-4, 6))}});

    // Three cylindrical paths on the (3, 5) cylinder with origin 0.
    ShiftPair sp53b = ShiftPair::create(Rat(-5), Rat(3));
    auto cyl = [&](const char* w, long lam) {
        return CylPath{DyckPath::from_word(Word(w)), decompose(sp53b, Rat(lam))};
    };
    write("cylinder_35.json",
          Json{{"paths", Json::array({to_json(cyl("22212211", -10)), to_json(cyl("22222111", -17)),
                                      to_json(cyl("22221211", -16))})}});
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact construction, verification and canonical ordered factorization of "
                 "polynomial pairs satisfying p(u) q(u) = p(u + beta) q(u + alpha)"};
    app.fallthrough();
    Options opt;
    if (const char* env = std::getenv("DYCKFACT_MAX_SIZE")) {
        try {
            opt.max_size = std::stoi(env);
        } catch (const std::exception&) {
            err << "warning: ignoring malformed DYCKFACT_MAX_SIZE\n";
        }
    }
    std::string seed_dir;

    app.add_option("--alpha", opt.alpha, "first shift parameter, rational a/b");
    app.add_option("--beta", opt.beta, "second shift parameter, rational a/b");
    app.add_option("--max-size", opt.max_size, "bound on m + n for enumeration");
    app.add_flag("--ascii", opt.ascii, "ASCII output where supported");
    app.add_flag("--json", "JSON output (the default)");
    app.add_option("--seed-examples", seed_dir, "write worked-example fixtures to a directory");

    auto* paths = app.add_subcommand("paths", "enumerate the Dyck paths with endpoint (m, n)");
    paths->add_option("--m", opt.m)->required();
    paths->add_option("--n", opt.n)->required();

    auto* count = app.add_subcommand("count", "count Dyck paths / irreducible orbits");
    count->add_option("--m", opt.m)->required();
    count->add_option("--n", opt.n)->required();

    auto* fundamental = app.add_subcommand("fundamental", "build the solution attached to a word");
    fundamental->add_option("--word", opt.word)->required();
    fundamental->add_option("--lambda", opt.lambda, "shift label (default 0)");

    auto* verify = app.add_subcommand("verify", "check a pair against the equation");
    auto* factor = app.add_subcommand("factor", "canonical ordered factorization of a solution");
    auto* product = app.add_subcommand("product", "rebuild the solution from a factorization");
    for (auto* c : {verify, factor, product}) {
        c->add_option("--input", opt.input_file, "JSON file");
        c->add_option("--json", opt.inline_json, "inline JSON");
    }

    auto* multiquiver = app.add_subcommand("multiquiver", "two-vertex multiquiver solution and its factorization");
    multiquiver->add_option("--alpha1", opt.alpha1)->required();
    multiquiver->add_option("--alpha2", opt.alpha2)->required();

    auto* orbit = app.add_subcommand("orbit-rep", "Dyck representative of a word's rotation orbit");
    orbit->add_option("--word", opt.word)->required();

    auto* render = app.add_subcommand("render", "ASCII pictures of paths and cylinders");
    render->add_option("--word", opt.word);
    render->add_option("--m", opt.m);
    render->add_option("--n", opt.n);
    render->add_option("--input", opt.input_file, "cylinder JSON file");
    render->add_option("--json", opt.inline_json, "inline cylinder JSON");

    app.require_subcommand(0, 1);

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (!seed_dir.empty()) {
            write_example_fixtures(seed_dir);
            out << dump(Json{{"written", seed_dir}});
            return 0;
        }
        if (paths->parsed()) cmd_paths(opt, out);
        else if (count->parsed()) cmd_count(opt, out);
        else if (fundamental->parsed()) cmd_fundamental(opt, out);
        else if (verify->parsed()) cmd_verify(opt, out);
        else if (factor->parsed()) cmd_factor(opt, out);
        else if (product->parsed()) cmd_product(opt, out);
        else if (multiquiver->parsed()) cmd_multiquiver(opt, out);
        else if (orbit->parsed()) cmd_orbit_rep(opt, out);
        else if (render->parsed()) cmd_render(opt, out);
        else {
            err << "usage error: no command given (try --help)\n";
            return 1;
        }
    } catch (const CLI::ValidationError& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 70;
    }
    return 0;
}

} // namespace dyckfact
