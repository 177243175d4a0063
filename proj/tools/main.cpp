#include "thetainv/json_io.hpp"
#include "thetainv/repro.hpp"
#include "thetainv/surgery.hpp"
#include "thetainv/theta_spaces.hpp"
#include "thetainv/twisted_homology.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace ti = thetainv;
using ti::io::json;

namespace {

constexpr const char* kHypothesis =
    "assumes the obstruction space of the surgered complement vanishes";

struct Globals {
    bool json_out = false;
    std::string rep = "v1";
    int eps = 0;
    bool extended = false;
    bool timings = false;
};

ti::RepSelector selector(const Globals& g) {
    ti::RepSelector sel;
    sel.variant = g.rep == "v2" ? 2 : 1;
    sel.extended = g.extended;
    return sel;
}

/* every command prints either the table or the JSON document (which embeds
   the same table), never both */
int emit(const Globals& g, json j, const std::string& table, int code = 0) {
    j["table"] = table;
    if (g.json_out)
        std::cout << ti::io::dumps(j) << "\n";
    else
        std::cout << table << "\n";
    return code;
}

std::string kv_table(const std::string& title,
                     const std::vector<std::pair<std::string, std::string>>& rows) {
    size_t width = 0;
    for (const auto& [k, v] : rows) width = std::max(width, k.size());
    std::string out = title;
    for (const auto& [k, v] : rows) {
        out += "\n  " + k + std::string(width - k.size(), ' ') + "  " + v;
    }
    return out;
}

std::string mono_label(const ti::TriLaurent::Key& e) {
    std::string out;
    for (int k = 0; k < 3; ++k) {
        if (e[static_cast<size_t>(k)] == 0) continue;
        if (!out.empty()) out += " ";
        out += "t" + std::to_string(k + 1);
        if (e[static_cast<size_t>(k)] != 1) out += "^" + std::to_string(e[static_cast<size_t>(k)]);
    }
    return out.empty() ? "1" : out;
}

std::vector<std::pair<std::string, std::string>> poly_rows(const ti::TriLaurent& p) {
    std::vector<std::pair<std::string, std::string>> rows;
    for (const auto& [e, c] : p.terms()) rows.emplace_back(mono_label(e), c.str());
    if (rows.empty()) rows.emplace_back("(zero)", "0");
    return rows;
}

/* scalar CLI argument: a JSON object, or a bare rational like "3/4" */
ti::Scalar parse_scalar_arg(const std::string& text) {
    if (!text.empty() && text.front() == '{')
        return ti::io::scalar_from_json(ti::io::parse_text(text));
    return ti::Scalar(ti::rational_from_string(text));
}

std::array<long, 3> parse_triple(const std::string& text) {
    std::array<long, 3> out{};
    std::istringstream is(text);
    std::string tok;
    for (int k = 0; k < 3; ++k) {
        if (!std::getline(is, tok, ','))
            throw std::invalid_argument("expected 'a,b,c' integers, got '" + text + "'");
        out[static_cast<size_t>(k)] = std::stol(tok);
    }
    if (std::getline(is, tok, ','))
        throw std::invalid_argument("expected exactly three entries in '" + text + "'");
    return out;
}

ti::EdgeDecoration parse_dec(const std::string& text) {
    size_t pos = text.rfind(':');
    if (pos == std::string::npos)
        throw std::invalid_argument("decoration must be 'word:exponent', got '" + text + "'");
    ti::EdgeDecoration e;
    e.word = text.substr(0, pos);
    e.t_exp = std::stol(text.substr(pos + 1));
    if (e.word.empty()) e.word = "1";
    return e;
}

std::string read_input_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// ---------------------------------------------------------------- field ----

int run_field(const Globals& g, const std::string& op, const std::string& a_text,
              const std::string& b_text) {
    ti::Scalar a = parse_scalar_arg(a_text);
    bool binary = op == "add" || op == "sub" || op == "mul" || op == "div";
    if (binary && b_text.empty())
        throw std::invalid_argument("operation '" + op + "' needs --b");

    ti::Scalar b = binary ? parse_scalar_arg(b_text) : ti::Scalar();
    ti::Scalar result;
    if (op == "add") result = a + b;
    else if (op == "sub") result = a - b;
    else if (op == "mul") result = a * b;
    else if (op == "div") result = a / b;
    else if (op == "inv") result = a.inverse();
    else if (op == "conj") result = a.conj();
    else if (op == "galois") result = a.galois_sqrt5();
    else throw std::invalid_argument("unknown field operation '" + op + "'");

    json j = json::object();
    j["op"] = op;
    j["a"] = ti::io::to_json(a);
    if (binary) j["b"] = ti::io::to_json(b);
    j["result"] = ti::io::to_json(result);

    std::vector<std::pair<std::string, std::string>> rows = {{"a", a.str()}};
    if (binary) rows.emplace_back("b", b.str());
    rows.emplace_back("result", result.str());
    return emit(g, std::move(j), kv_table("field " + op, rows));
}

// ---------------------------------------------------------------- theta ----

int run_theta_normal(const Globals& g, const std::string& triple_text, const std::string& coeff_text) {
    auto t = parse_triple(triple_text);
    ti::Scalar coeff = coeff_text.empty() ? ti::Scalar(1) : parse_scalar_arg(coeff_text);
    ti::ThetaClass c = ti::ThetaClass::normal_form(g.eps, t[0], t[1], t[2], coeff);
    json j = json::object();
    j["class"] = ti::io::to_json(c);
    return emit(g, std::move(j),
                kv_table("canonical class", {{"input", triple_text}, {"eps", std::to_string(g.eps)},
                                             {"class", c.str()}}));
}

int run_theta_embed(const Globals& g, const std::string& triple_text) {
    auto t = parse_triple(triple_text);
    ti::ThetaClass c = ti::w_scalar(g.eps, t[0], t[1], t[2]);
    ti::SThetaElt elt = ti::embed_class(c);
    json j = json::object();
    j["class"] = ti::io::to_json(c);
    j["value"] = ti::io::to_json(elt);
    auto rows = poly_rows(elt.image());
    rows.insert(rows.begin(), {"class", c.str()});
    return emit(g, std::move(j), kv_table("embedded scalar class, eps = " + std::to_string(g.eps), rows));
}

int run_theta_fpoly(const Globals& g, long p) {
    ti::TriLaurent f = ti::f_poly(p);
    json j = json::object();
    j["p"] = p;
    j["value"] = ti::io::to_json(f);
    return emit(g, std::move(j), kv_table("f_" + std::to_string(p), poly_rows(f)));
}

// ------------------------------------------------------------------ rep ----

int run_rep_show(const Globals& g) {
    ti::Rep rho = ti::rho_235(selector(g).variant);
    if (selector(g).extended) rho = ti::rho1_extension(rho);
    const ti::GroupPresentation& pres = rho.presentation();
    std::vector<ti::SU2Matrix> image = ti::enumerate_image(rho);

    json j = json::object();
    j["presentation"] = ti::io::to_json(pres);
    j["presentation-hash"] = ti::io::presentation_hash(pres);
    json images = json::object();
    for (size_t k = 0; k < pres.gens.size(); ++k)
        images[pres.gens[k]] = ti::io::to_json(ti::SU2Matrix(rho.image(static_cast<int>(k))));
    j["images"] = std::move(images);
    j["relators-verified"] = true;  // Rep construction already enforced this
    j["image-size"] = image.size();

    std::vector<std::pair<std::string, std::string>> rows;
    rows.emplace_back("generators", [&] {
        std::string s;
        for (const auto& gen : pres.gens) s += (s.empty() ? "" : " ") + gen;
        return s;
    }());
    for (size_t k = 0; k < pres.relators.size(); ++k)
        rows.emplace_back("relator " + std::to_string(k + 1), pres.relators[k].str(pres.gens) + " = 1");
    rows.emplace_back("presentation-hash", ti::io::presentation_hash(pres));
    rows.emplace_back("image-size", std::to_string(image.size()));
    return emit(g, std::move(j), kv_table("representation " + g.rep, rows));
}

int run_rep_eval(const Globals& g, const std::string& word_text) {
    ti::Rep rho = ti::rho_235(selector(g).variant);
    if (selector(g).extended) rho = ti::rho1_extension(rho);
    ti::SU2Matrix m(rho.eval(word_text));
    json j = json::object();
    j["word"] = word_text;
    j["matrix"] = ti::io::to_json(m);
    j["trace"] = ti::io::to_json(m.trace());
    j["circle-weight"] = ti::io::to_json(ti::circle_weight(m));
    return emit(g, std::move(j),
                kv_table("rho(" + word_text + "), variant " + g.rep,
                         {{"matrix", m.str()},
                          {"trace", m.trace().str()},
                          {"circle-weight", ti::circle_weight(m).str()}}));
}

int run_rep_enum(const Globals& g, bool full) {
    ti::Rep rho = ti::rho_235(selector(g).variant);
    if (selector(g).extended) rho = ti::rho1_extension(rho);
    std::vector<ti::SU2Matrix> image = ti::enumerate_image(rho);

    std::map<std::string, int> trace_counts;
    for (const auto& m : image) ++trace_counts[m.trace().str()];

    json j = json::object();
    j["image-size"] = image.size();
    json traces = json::object();
    for (const auto& [t, n] : trace_counts) traces[t] = n;
    j["trace-multiset"] = std::move(traces);
    if (full) {
        json elems = json::array();
        for (const auto& m : image) elems.push_back(ti::io::to_json(m));
        j["elements"] = std::move(elems);
    }

    std::vector<std::pair<std::string, std::string>> rows;
    rows.emplace_back("image-size", std::to_string(image.size()));
    for (const auto& [t, n] : trace_counts)
        rows.emplace_back("trace " + t, std::to_string(n) + " elements");
    return emit(g, std::move(j), kv_table("enumerated image, variant " + g.rep, rows));
}

// ----------------------------------------------------------- cohomology ----

int run_cohomology(const Globals& g, const std::string& coeffs, bool matrices) {
    ti::GroupPresentation pres = ti::presentation_235();
    ti::Rep base = ti::rho_235(selector(g).variant);

    std::string note;
    ti::Rep rho = [&]() -> ti::Rep {
        if (coeffs == "trivial") return ti::trivial_rep(pres);
        if (coeffs == "defining") return base;
        if (coeffs == "adjoint") return ti::compose_ad(base);
        if (coeffs == "sym2") return ti::compose_sym(base, 2);
        if (coeffs == "sym4") return ti::compose_sym(base, 4);
        if (coeffs == "adjoint-laurent") {
            note = "Laurent coefficients reduce by scalar extension to the plain "
                   "conjugation block; dimensions below are that block's";
            return ti::compose_ad(base);
        }
        throw std::invalid_argument("unknown coefficient system '" + coeffs + "'");
    }();

    ti::CochainMaps maps = ti::cochain_maps(pres, rho);
    auto [h0, h1] = ti::cohomology_dims(maps);

    json j = json::object();
    j["coefficient-system"] = coeffs;
    j["dim"] = rho.dim();
    j["h0"] = h0;
    j["h1"] = h1;
    j["top-degrees"] = "inferred by duality from (h0, h1)";
    j["presentation-hash"] = ti::io::presentation_hash(pres);
    if (!note.empty()) j["note"] = note;
    if (matrices) {
        j["d0"] = ti::io::to_json(maps.d0);
        j["d1"] = ti::io::to_json(maps.d1);
    }

    std::vector<std::pair<std::string, std::string>> rows = {
        {"coefficient-system", coeffs},
        {"dim", std::to_string(rho.dim())},
        {"h0", std::to_string(h0)},
        {"h1", std::to_string(h1)},
        {"top-degrees", "inferred by duality from (h0, h1)"},
        {"presentation-hash", ti::io::presentation_hash(pres)},
    };
    if (!note.empty()) rows.emplace_back("note", note);
    if (matrices) {
        rows.emplace_back("d0", std::to_string(maps.d0.rows()) + "x" + std::to_string(maps.d0.cols()) +
                                    " (see JSON output)");
        rows.emplace_back("d1", std::to_string(maps.d1.rows()) + "x" + std::to_string(maps.d1.cols()) +
                                    " (see JSON output)");
    }
    return emit(g, std::move(j), kv_table("twisted cohomology of the (2,3,5) presentation", rows));
}

// --------------------------------------------------------------- ztheta ----

int run_eval(const Globals& g, const std::vector<std::string>& dec_texts) {
    if (dec_texts.size() != 3)
        throw std::invalid_argument("exactly three --dec edge decorations are required");
    ti::SurgerySpec spec;
    spec.parity = g.eps;
    for (size_t k = 0; k < 3; ++k) spec.edges[k] = parse_dec(dec_texts[k]);
    spec.rep = selector(g);

    ti::SurgeryValue v = ti::z_theta_surgery(spec);
    json j = json::object();
    j["spec"] = ti::io::to_json(spec);
    j["description"] = v.description;
    j["value"] = ti::io::to_json(v.image);
    j["hypothesis"] = kHypothesis;

    auto rows = poly_rows(v.image.image());
    rows.insert(rows.begin(), {"graph", v.description});
    rows.emplace_back("hypothesis", kHypothesis);
    return emit(g, std::move(j), kv_table("surgery value, eps = " + std::to_string(g.eps), rows));
}

int run_lift(const Globals& g, const std::string& gw, const std::string& hw, long p, long q, long r) {
    ti::SThetaElt value = ti::cyclic_lift_value(gw, hw, p, q, r, selector(g));
    json j = json::object();
    j["g"] = gw;
    j["h"] = hw;
    j["p"] = p;
    j["q"] = q;
    j["r"] = r;
    j["description"] = "2r·Θ(1, " + gw + " t^" + std::to_string(p) + ", " + hw + " t^" +
                       std::to_string(q) + "), r = " + std::to_string(r);
    j["value"] = ti::io::to_json(value);
    j["hypothesis"] = kHypothesis;

    auto rows = poly_rows(value.image());
    rows.insert(rows.begin(), {"graph", j["description"].get<std::string>()});
    rows.emplace_back("hypothesis", kHypothesis);
    return emit(g, std::move(j), kv_table("cyclic-cover value, r = " + std::to_string(r), rows));
}

int run_cert(const Globals& g, const std::string& path) {
    json doc = ti::io::parse_text(read_input_file(path));
    const json& specs_json = [&]() -> const json& {
        if (!doc.is_object() || !doc.contains("specs"))
            throw ti::io::schema_error("", "expected an object with a 'specs' array");
        return doc["specs"];
    }();
    if (!specs_json.is_array()) throw ti::io::schema_error("/specs", "expected an array");
    std::vector<ti::SurgerySpec> specs;
    for (size_t k = 0; k < specs_json.size(); ++k)
        specs.push_back(ti::io::surgery_spec_from_json(specs_json[k], "/specs/" + std::to_string(k)));

    ti::Certificate cert = ti::independence_certificate(specs);
    json j = ti::io::to_json(cert);
    j["hypothesis"] = kHypothesis;

    std::vector<std::pair<std::string, std::string>> rows = {
        {"family-size", std::to_string(cert.inputs.size())},
        {"rank-full", std::to_string(cert.rank_full)},
        {"rank-coker", std::to_string(cert.rank_coker)},
        {"conclusion", cert.conclusion},
        {"hypothesis", kHypothesis},
    };
    int code = cert.conclusion == "independent-in-cokernel" ? 0 : 1;
    return emit(g, std::move(j), kv_table("independence certificate", rows), code);
}

// ---------------------------------------------------------------- repro ----

int run_repro_cmd(const Globals& g, std::vector<std::string> cases) {
    if (cases.empty()) cases = ti::repro_case_names();

    std::vector<ti::ReproReport> reports;
    for (const std::string& name : cases) reports.push_back(ti::run_repro(name));

    bool all_match = true;
    json arr = json::array();
    std::string table;
    for (const ti::ReproReport& r : reports) {
        all_match = all_match && r.match;
        arr.push_back(ti::report_to_json(r));
        table += (table.empty() ? "" : "\n");
        table += std::string("[") + (r.match ? "PASS" : "FAIL") + "] " + r.case_name;
        if (g.timings) {
            char buf[32];
            std::snprintf(buf, sizeof buf, " (%.3fs)", r.runtime_seconds);
            table += buf;
        }
        if (!r.match) {
            table += "\n  expected: " + r.expected;
            table += "\n  computed: " + r.computed;
        }
    }
    table += std::string("\n") + (all_match ? "all cases match" : "MISMATCH in at least one case");

    json j = json::object();
    j["reports"] = std::move(arr);
    j["all-match"] = all_match;
    return emit(g, std::move(j), table, all_match ? 0 : 1);
}

}  // namespace

int main(int argc, char** argv) {
    Globals g;
    CLI::App app{"exact evaluator for the two-loop finite-type invariant"};
    app.require_subcommand(1);
    app.add_flag("--json", g.json_out, "emit the JSON document instead of the table");
    app.add_option("--rep", g.rep, "representation variant")->check(CLI::IsMember({"v1", "v2"}));
    app.add_option("--eps", g.eps, "parity of the graph class")->check(CLI::Range(0, 1));
    app.add_flag("--extended", g.extended, "adjoin the central circle generator t -> -I");
    app.add_flag("--timings", g.timings, "show per-case runtimes (human output only)");

    std::function<int()> action;

    // field
    std::string field_op, field_a, field_b;
    auto* field = app.add_subcommand("field", "arithmetic in Q(i, sqrt5)");
    field->fallthrough();
    field->add_option("op", field_op, "add|sub|mul|div|inv|conj|galois")
        ->required()
        ->check(CLI::IsMember({"add", "sub", "mul", "div", "inv", "conj", "galois"}));
    field->add_option("--a", field_a, "first operand (JSON object or rational)")->required();
    field->add_option("--b", field_b, "second operand");
    field->callback([&] { action = [&] { return run_field(g, field_op, field_a, field_b); }; });

    // theta
    auto* theta = app.add_subcommand("theta", "scalar graph classes and their embeddings");
    theta->require_subcommand(1);
    theta->fallthrough();
    std::string theta_triple, theta_coeff;
    auto* theta_normal = theta->add_subcommand("normal", "canonical form of an exponent triple");
    theta_normal->fallthrough();
    theta_normal->add_option("--triple", theta_triple, "exponents 'p,q,r'")->required();
    theta_normal->add_option("--coeff", theta_coeff, "coefficient (JSON object or rational)");
    theta_normal->callback(
        [&] { action = [&] { return run_theta_normal(g, theta_triple, theta_coeff); }; });
    std::string embed_triple;
    auto* theta_embed = theta->add_subcommand("embed", "difference class of edge exponents, embedded");
    theta_embed->fallthrough();
    theta_embed->add_option("--triple", embed_triple, "edge exponents 'a,b,c'")->required();
    theta_embed->callback([&] { action = [&] { return run_theta_embed(g, embed_triple); }; });
    long fpoly_p = 3;
    auto* theta_fpoly = theta->add_subcommand("fpoly", "the standard family member f_p");
    theta_fpoly->fallthrough();
    theta_fpoly->add_option("--p", fpoly_p, "family index")->required();
    theta_fpoly->callback([&] { action = [&] { return run_theta_fpoly(g, fpoly_p); }; });

    // rep
    auto* rep = app.add_subcommand("rep", "the exact special-unitary representation");
    rep->require_subcommand(1);
    rep->fallthrough();
    auto* rep_show = rep->add_subcommand("show", "presentation, generator images, image size");
    rep_show->fallthrough();
    rep_show->callback([&] { action = [&] { return run_rep_show(g); }; });
    std::string rep_word;
    auto* rep_eval = rep->add_subcommand("eval", "evaluate a word");
    rep_eval->fallthrough();
    rep_eval->add_option("--word", rep_word, "group word, e.g. 'x3 x2^'")->required();
    rep_eval->callback([&] { action = [&] { return run_rep_eval(g, rep_word); }; });
    bool rep_full = false;
    auto* rep_enum = rep->add_subcommand("enum", "enumerate the image");
    rep_enum->fallthrough();
    rep_enum->add_flag("--full", rep_full, "list every element");
    rep_enum->callback([&] { action = [&] { return run_rep_enum(g, rep_full); }; });

    // cohomology
    std::string coeffs = "adjoint";
    bool matrices = false;
    auto* cohom = app.add_subcommand("cohomology", "twisted cochain dimensions");
    cohom->fallthrough();
    cohom->add_option("--coeffs", coeffs, "coefficient system")
        ->check(CLI::IsMember({"trivial", "defining", "adjoint", "sym2", "sym4", "adjoint-laurent"}));
    cohom->add_flag("--matrices", matrices, "include the full cochain maps in the JSON");
    cohom->callback([&] { action = [&] { return run_cohomology(g, coeffs, matrices); }; });

    // ztheta group and its top-level aliases
    std::vector<std::string> eval_decs;
    std::string lift_g = "1", lift_h = "1", cert_file;
    long lift_p = 1, lift_q = 1, lift_r = 1;
    auto add_eval = [&](CLI::App* parent) {
        auto* c = parent->add_subcommand("eval", "surgery value of a decorated graph");
        c->fallthrough();
        c->add_option("--dec", eval_decs, "edge decoration 'word:exp', given three times");
        c->callback([&] { action = [&] { return run_eval(g, eval_decs); }; });
    };
    auto add_lift = [&](CLI::App* parent) {
        auto* c = parent->add_subcommand("lift", "r-fold cyclic-cover value");
        c->fallthrough();
        c->set_help_flag("--help", "print this help message and exit");  // frees --h
        c->add_option("--g", lift_g, "second-edge word");
        c->add_option("--h", lift_h, "third-edge word");
        c->add_option("--p", lift_p, "second-edge exponent");
        c->add_option("--q", lift_q, "third-edge exponent");
        c->add_option("--r", lift_r, "cover degree")->required();
        c->callback([&] { action = [&] { return run_lift(g, lift_g, lift_h, lift_p, lift_q, lift_r); }; });
    };
    auto add_cert = [&](CLI::App* parent) {
        auto* c = parent->add_subcommand("cert", "independence certificate for a family");
        c->fallthrough();
        c->add_option("--file", cert_file, "JSON file with {\"specs\": [...]} ('-' for stdin)")
            ->required();
        c->callback([&] { action = [&] { return run_cert(g, cert_file); }; });
    };
    auto* zt = app.add_subcommand("ztheta", "surgery-formula evaluation");
    zt->require_subcommand(1);
    zt->fallthrough();
    add_eval(zt);
    add_lift(zt);
    add_cert(zt);
    add_eval(&app);
    add_lift(&app);
    add_cert(&app);

    // repro
    std::vector<std::string> repro_cases;
    auto* repro = app.add_subcommand("repro", "recompute the published values");
    repro->fallthrough();
    repro->add_option("cases", repro_cases, "case names (default: all)")
        ->check(CLI::IsMember(ti::repro_case_names()));
    repro->callback([&] { action = [&] { return run_repro_cmd(g, repro_cases); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return action ? action() : 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
}
