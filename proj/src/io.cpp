#include "coquecigrue/io.hpp"

#include "coquecigrue/errors.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace coquecigrue {

namespace {

std::string strip(std::string_view s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos)
        return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    std::string tok;
    while (in >> tok)
        out.push_back(tok);
    return out;
}

std::vector<std::string> split_list(std::string_view s, std::size_t line_no) {
    std::vector<std::string> out;
    std::string text(s);
    std::size_t start = 0;
    if (strip(text).empty())
        return out;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string item = strip(text.substr(start, comma - start));
        if (item.empty())
            throw ParseError("line " + std::to_string(line_no) + ": empty list item");
        out.push_back(item);
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return out;
}

LinearCombo parse_combo(std::string_view s, std::size_t line_no) {
    LinearCombo combo;
    std::string text(s);
    if (strip(text).empty())
        return combo;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string item = strip(text.substr(start, comma - start));
        std::size_t colon = item.find(':');
        if (colon == std::string::npos)
            throw ParseError("line " + std::to_string(line_no) +
                             ": expected 'label: coefficient' in '" + item + "'");
        std::string label = strip(item.substr(0, colon));
        std::string coeff = strip(item.substr(colon + 1));
        if (label.empty() || coeff.empty())
            throw ParseError("line " + std::to_string(line_no) +
                             ": expected 'label: coefficient' in '" + item + "'");
        combo.terms.emplace_back(std::move(label), std::move(coeff));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return combo;
}

std::map<std::string, std::size_t> index_labels(const std::vector<std::string>& labels,
                                                const std::string& what) {
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i].empty())
            throw ValidationError("empty label in " + what);
        if (!index.emplace(labels[i], i).second)
            throw ValidationError("duplicate label '" + labels[i] + "' in " + what);
    }
    return index;
}

SparseVec resolve_combo(const LinearCombo& combo, const std::map<std::string, std::size_t>& index,
                        const std::string& space, const std::string& context) {
    SparseVec out;
    for (const auto& [label, coeff] : combo.terms) {
        auto it = index.find(label);
        if (it == index.end())
            throw ValidationError("unknown " + space + " label '" + label + "' in " + context);
        axpy(out, parse_rational(coeff), unit_vec(it->second));
    }
    return out;
}

void validate_document(const InputDocument& doc) {
    if (doc.kind != "leibniz" && doc.kind != "lie" && doc.kind != "lm")
        throw ValidationError("kind must be leibniz, lie or lm, got '" + doc.kind + "'");
    auto basis = index_labels(doc.basis, "basis");
    std::map<std::pair<std::string, std::string>, bool> seen;
    for (const auto& entry : doc.brackets) {
        std::string context = "bracket " + entry.left + " " + entry.right;
        if (!basis.contains(entry.left))
            throw ValidationError("unknown basis label '" + entry.left + "' in " + context);
        if (!basis.contains(entry.right))
            throw ValidationError("unknown basis label '" + entry.right + "' in " + context);
        if (!seen.emplace(std::make_pair(entry.left, entry.right), true).second)
            throw ValidationError("duplicate " + context);
        resolve_combo(entry.value, basis, "basis", context);
    }
    if (doc.kind != "lm") {
        if (!doc.module_basis.empty() || !doc.action.empty() || !doc.delta.empty())
            throw ValidationError("module data requires kind lm");
        return;
    }
    auto module = index_labels(doc.module_basis, "module_basis");
    std::map<std::pair<std::string, std::string>, bool> seen_action;
    for (const auto& entry : doc.action) {
        std::string context = "action " + entry.left + " " + entry.right;
        if (!module.contains(entry.left))
            throw ValidationError("unknown module label '" + entry.left + "' in " + context);
        if (!basis.contains(entry.right))
            throw ValidationError("unknown basis label '" + entry.right + "' in " + context);
        if (!seen_action.emplace(std::make_pair(entry.left, entry.right), true).second)
            throw ValidationError("duplicate " + context);
        resolve_combo(entry.value, module, "module", context);
    }
    std::map<std::string, bool> seen_delta;
    for (const auto& entry : doc.delta) {
        std::string context = "delta " + entry.label;
        if (!module.contains(entry.label))
            throw ValidationError("unknown module label '" + entry.label + "' in " + context);
        if (!seen_delta.emplace(entry.label, true).second)
            throw ValidationError("duplicate " + context);
        resolve_combo(entry.value, basis, "basis", context);
    }
}

} // namespace

InputDocument parse_document_text(std::string_view text, const std::string& source_name) {
    InputDocument doc;
    doc.digest = fnv1a64_hex(text);
    bool saw_kind = false, saw_name = false, saw_basis = false, saw_module = false;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view raw =
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        std::string line(raw.substr(0, raw.find('#')));
        line = strip(line);
        if (line.empty())
            continue;

        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("line " + std::to_string(line_no) + " of " + source_name +
                             ": expected '='");
        auto head = split_ws(line.substr(0, eq));
        std::string rhs = strip(line.substr(eq + 1));
        if (head.empty())
            throw ParseError("line " + std::to_string(line_no) + " of " + source_name +
                             ": missing directive");

        auto expect_arity = [&](std::size_t n) {
            if (head.size() != n)
                throw ParseError("line " + std::to_string(line_no) + " of " + source_name +
                                 ": malformed '" + head[0] + "' directive");
        };
        auto once = [&](bool& flag) {
            if (flag)
                throw ParseError("line " + std::to_string(line_no) + " of " + source_name +
                                 ": repeated '" + head[0] + "'");
            flag = true;
        };

        if (head[0] == "name") {
            expect_arity(1);
            once(saw_name);
            if (rhs.empty())
                throw ParseError("line " + std::to_string(line_no) + ": empty name");
            doc.name = rhs;
        } else if (head[0] == "kind") {
            expect_arity(1);
            once(saw_kind);
            doc.kind = rhs;
        } else if (head[0] == "basis") {
            expect_arity(1);
            once(saw_basis);
            doc.basis = split_list(rhs, line_no);
        } else if (head[0] == "module_basis") {
            expect_arity(1);
            once(saw_module);
            doc.module_basis = split_list(rhs, line_no);
        } else if (head[0] == "bracket") {
            expect_arity(3);
            doc.brackets.push_back({head[1], head[2], parse_combo(rhs, line_no)});
        } else if (head[0] == "action") {
            expect_arity(3);
            doc.action.push_back({head[1], head[2], parse_combo(rhs, line_no)});
        } else if (head[0] == "delta") {
            expect_arity(2);
            doc.delta.push_back({head[1], parse_combo(rhs, line_no)});
        } else {
            throw ParseError("line " + std::to_string(line_no) + " of " + source_name +
                             ": unknown directive '" + head[0] + "'");
        }
    }
    if (!saw_kind)
        throw ValidationError(source_name + ": missing kind");
    if (!saw_basis)
        throw ValidationError(source_name + ": missing basis");
    validate_document(doc);
    return doc;
}

InputDocument parse_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot read '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_document_text(buffer.str(), path);
}

namespace {

std::string combo_to_text(const LinearCombo& combo) {
    std::string out;
    for (const auto& [label, coeff] : combo.terms) {
        if (!out.empty())
            out += ", ";
        out += label + ": " + coeff;
    }
    return out;
}

std::string list_to_text(const std::vector<std::string>& items) {
    std::string out;
    for (const auto& item : items) {
        if (!out.empty())
            out += ", ";
        out += item;
    }
    return out;
}

} // namespace

std::string serialize_document(const InputDocument& doc) {
    std::string out;
    out += "name = " + doc.name + "\n";
    out += "kind = " + doc.kind + "\n";
    out += "basis = " + list_to_text(doc.basis) + "\n";
    for (const auto& entry : doc.brackets)
        out += "bracket " + entry.left + " " + entry.right + " = " + combo_to_text(entry.value) +
               "\n";
    if (doc.kind == "lm") {
        out += "module_basis = " + list_to_text(doc.module_basis) + "\n";
        for (const auto& entry : doc.action)
            out += "action " + entry.left + " " + entry.right + " = " +
                   combo_to_text(entry.value) + "\n";
        for (const auto& entry : doc.delta)
            out += "delta " + entry.label + " = " + combo_to_text(entry.value) + "\n";
    }
    return out;
}

AlgebraPresentation algebra_from_document(const InputDocument& doc) {
    auto basis = index_labels(doc.basis, "basis");
    BracketTable table;
    for (const auto& entry : doc.brackets) {
        SparseVec value = resolve_combo(entry.value, basis, "basis",
                                        "bracket " + entry.left + " " + entry.right);
        if (!value.empty())
            table.emplace(std::make_pair(basis.at(entry.left), basis.at(entry.right)),
                          std::move(value));
    }
    return AlgebraPresentation(doc.basis, std::move(table));
}

LMLieAlgebra lm_algebra_from_document(const InputDocument& doc) {
    if (doc.kind != "lm")
        throw ValidationError("document kind is not lm");
    AlgebraPresentation g = algebra_from_document(doc);
    auto basis = index_labels(doc.basis, "basis");
    auto module = index_labels(doc.module_basis, "module_basis");

    ActionTable action;
    for (const auto& entry : doc.action) {
        SparseVec value = resolve_combo(entry.value, module, "module",
                                        "action " + entry.left + " " + entry.right);
        if (!value.empty())
            action.emplace(std::make_pair(module.at(entry.left), basis.at(entry.right)),
                           std::move(value));
    }
    RightModule m(doc.module_basis, g.dim(), std::move(action));

    QMatrix delta(g.dim(), m.dim());
    for (const auto& entry : doc.delta) {
        SparseVec value = resolve_combo(entry.value, basis, "basis", "delta " + entry.label);
        for (const auto& [i, c] : value)
            delta.at(i, module.at(entry.label)) = c;
    }
    return LMLieAlgebra::unchecked(std::move(g), std::move(m), std::move(delta));
}

std::string fnv1a64_hex(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

namespace {

CheckResult to_check(const std::string& name, AxiomReport report) {
    return {name, report.passed(), std::move(report.violations)};
}

using json = nlohmann::ordered_json;

json combo_json(const SparseVec& v, std::span<const std::string> labels) {
    json j = json::object();
    for (const auto& [i, c] : v)
        j[labels[i]] = rational_to_string(c);
    return j;
}

json series_json(const SeriesMap& f, std::span<const std::string> labels) {
    json arr = json::array();
    for (const auto& [key, vec] : f.coeffs)
        arr.push_back(json{{"x", key.first.to_string(labels)},
                           {"y", key.second.to_string(labels)},
                           {"coeff", combo_json(vec, labels)}});
    return arr;
}

json presentation_json(const AlgebraPresentation& a) {
    json brackets = json::array();
    for (const auto& [key, vec] : a.table())
        brackets.push_back(json{{"left", a.basis_names()[key.first]},
                                {"right", a.basis_names()[key.second]},
                                {"value", combo_json(vec, a.basis_names())}});
    return json{{"basis", a.basis_names()}, {"brackets", std::move(brackets)}};
}

// Adds the axiom suite for the document kind as check entries; returns
// the algebra in the linear-map category when the axioms hold.
std::optional<LMLieAlgebra> build_lm(RunReport& rep, const InputDocument& doc) {
    if (doc.kind == "lm") {
        LMLieAlgebra a = lm_algebra_from_document(doc);
        rep.checks.push_back(to_check("lie-degree0", check_lie(a.lie())));
        rep.checks.push_back(to_check("right-module", check_right_module(a.module(), a.lie())));
        rep.checks.push_back(to_check("equivariance", check_equivariance(a)));
        if (!rep.ok())
            return std::nullopt;
        return a;
    }
    AlgebraPresentation l = algebra_from_document(doc);
    rep.checks.push_back(to_check("leibniz", check_leibniz(l)));
    if (!rep.ok())
        return std::nullopt;
    return lm_from_leibniz(l);
}

void run_check(RunReport& rep, const InputDocument& doc) {
    if (doc.kind == "leibniz") {
        AlgebraPresentation a = algebra_from_document(doc);
        rep.checks.push_back(to_check("leibniz", check_leibniz(a)));
        rep.payload["dims"] = json{{"algebra", a.dim()}};
        return;
    }
    if (doc.kind == "lie") {
        AlgebraPresentation a = algebra_from_document(doc);
        rep.checks.push_back(to_check("lie", check_lie(a)));
        rep.payload["dims"] = json{{"algebra", a.dim()}};
        return;
    }
    LMLieAlgebra a = lm_algebra_from_document(doc);
    auto lie = check_lie(a.lie());
    auto mod = check_right_module(a.module(), a.lie());
    auto equi = check_equivariance(a);
    auto jac = check_lm_jacobi(a);
    bool componentwise = lie.passed() && mod.passed() && equi.passed();
    bool blockwise = jac.passed();
    rep.checks.push_back(to_check("lie-degree0", std::move(lie)));
    rep.checks.push_back(to_check("right-module", std::move(mod)));
    rep.checks.push_back(to_check("equivariance", std::move(equi)));
    rep.checks.push_back(to_check("lm-jacobi", std::move(jac)));
    CheckResult agree{"blockwise-matches-componentwise", componentwise == blockwise, {}};
    if (!agree.passed)
        agree.violations.push_back({"agreement",
                                    {},
                                    blockwise ? "blockwise pass" : "blockwise fail",
                                    componentwise ? "componentwise pass" : "componentwise fail"});
    rep.checks.push_back(std::move(agree));
    rep.payload["dims"] =
        json{{"algebra", a.lie().dim()}, {"module", a.module().dim()}};
}

void run_liezation(RunReport& rep, const InputDocument& doc) {
    if (doc.kind == "lm")
        throw ValidationError("liezation expects a leibniz or lie document");
    AlgebraPresentation a = algebra_from_document(doc);
    rep.checks.push_back(to_check("leibniz", check_leibniz(a)));
    if (!rep.ok())
        return;
    Liezation lz = liezation(a);
    rep.checks.push_back({"quotient-is-lie", true, {}});

    json projection = json::array();
    for (std::size_t r = 0; r < lz.projection.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < lz.projection.cols(); ++c)
            row.push_back(rational_to_string(lz.projection.at(r, c)));
        projection.push_back(std::move(row));
    }
    rep.payload["quotient"] = presentation_json(lz.quotient);
    rep.payload["projection"] = std::move(projection);
    rep.payload["ideal_dim"] = lz.ideal_basis.size();
}

void run_envelope(RunReport& rep, const InputDocument& doc, const RunOptions& opt) {
    auto a = build_lm(rep, doc);
    if (!a)
        return;
    LMEnveloping env(*a);
    const auto& glabels = a->lie().basis_names();
    const auto& mlabels = a->module().basis_names();

    AlgebraPresentation leib = leibniz_from_lm(*a);
    AxiomReport recovery;
    for (std::size_t u = 0; u < mlabels.size(); ++u)
        for (std::size_t v = 0; v < mlabels.size(); ++v) {
            SparseVec got = env.primitive_part(
                env.dialg_left(env.generator(u), env.generator(v)), Trivialization::LEFT);
            const SparseVec& want = leib.bracket(u, v);
            if (got != want)
                recovery.violations.push_back({"bracket-recovery",
                                               {u, v},
                                               vec_to_string(got, mlabels),
                                               vec_to_string(want, mlabels)});
        }
    rep.checks.push_back(to_check("bracket-recovery", std::move(recovery)));
    rep.checks.push_back(to_check("dialgebra-axioms", env.check_dialgebra(opt.degree)));

    json products = json::array();
    for (std::size_t u = 0; u < mlabels.size(); ++u)
        for (std::size_t v = 0; v < mlabels.size(); ++v) {
            BimoduleElement gu = env.generator(u), gv = env.generator(v);
            products.push_back(
                json{{"left", mlabels[u]},
                     {"right", mlabels[v]},
                     {"left_product", bimodule_to_string(env.dialg_left(gu, gv), glabels, mlabels)},
                     {"right_product",
                      bimodule_to_string(env.dialg_right(gu, gv), glabels, mlabels)}});
        }
    rep.payload["degree"] = opt.degree;
    rep.payload["generators"] = mlabels;
    rep.payload["products"] = std::move(products);
}

json g1_json(const G1Series& g1, std::span<const std::string> glabels,
             std::span<const std::string> mlabels) {
    json arr = json::array();
    for (const auto& [key, vec] : g1.coeffs)
        arr.push_back(json{{"x", std::get<0>(key).to_string(glabels)},
                           {"v", mlabels[std::get<1>(key)]},
                           {"y", std::get<2>(key).to_string(glabels)},
                           {"coeff", combo_json(vec, mlabels)}});
    return arr;
}

json g2_json(const G2Series& g2, std::span<const std::string> glabels,
             std::span<const std::string> mlabels) {
    json arr = json::array();
    for (const auto& [key, vec] : g2.coeffs)
        arr.push_back(json{{"v", mlabels[key.first]},
                           {"y", key.second.to_string(glabels)},
                           {"coeff", combo_json(vec, mlabels)}});
    return arr;
}

json claims_json(const LMIntegrationReport& ir) {
    json arr = json::array();
    for (const auto& c : ir.claims) {
        json entry{{"name", c.name},
                   {"applicable", c.applicable},
                   {"asserted", c.asserted},
                   {"passed", c.applicable ? json(c.passed) : json(nullptr)}};
        entry["discrepancies"] = c.discrepancies;
        arr.push_back(std::move(entry));
    }
    return arr;
}

void run_integrate(RunReport& rep, const InputDocument& doc, const RunOptions& opt) {
    auto a = build_lm(rep, doc);
    if (!a)
        return;
    std::vector<Trivialization> trivs;
    if (opt.triv == "left" || opt.triv == "both")
        trivs.push_back(Trivialization::LEFT);
    if (opt.triv == "sym" || opt.triv == "both")
        trivs.push_back(Trivialization::SYM);

    const auto& glabels = a->lie().basis_names();
    const auto& mlabels = a->module().basis_names();
    bool have_f = false;
    for (Trivialization t : trivs) {
        LMFormalGroup g = integrate_lm(*a, opt.order, t);
        std::string tag = trivialization_name(t);
        rep.checks.push_back(
            to_check("formal-group-axioms[" + tag + "]", verify_formal_group(g.f, opt.order)));
        LMIntegrationReport ir = verify_lm_integration(g, *a, opt.order);
        for (const auto& claim : ir.claims)
            if (claim.asserted && claim.applicable) {
                CheckResult c{"claim:" + claim.name + "[" + tag + "]", claim.passed, {}};
                for (const auto& d : claim.discrepancies)
                    c.violations.push_back({claim.name, {}, d, ""});
                rep.checks.push_back(std::move(c));
            }
        if (!have_f) {
            rep.payload["order"] = opt.order;
            rep.payload["f"] = series_json(g.f, glabels);
            have_f = true;
        }
        json section;
        section["g1"] = g1_json(g.g1, glabels, mlabels);
        section["g2"] = g2_json(g.g2, glabels, mlabels);
        json alpha = json::array();
        for (const auto& [key, vec] : g.alpha_dependence)
            alpha.push_back(json{{"x", std::get<0>(key).to_string(glabels)},
                                 {"v", mlabels[std::get<1>(key)]},
                                 {"y", std::get<2>(key).to_string(glabels)},
                                 {"coeff", combo_json(vec, mlabels)}});
        section["alpha_dependence"] = std::move(alpha);
        section["claims"] = claims_json(ir);
        rep.payload[tag] = std::move(section);
    }
}

void run_oracle(RunReport& rep, const InputDocument& doc, const RunOptions& opt) {
    std::optional<AlgebraPresentation> g;
    if (doc.kind == "lie") {
        AlgebraPresentation a = algebra_from_document(doc);
        rep.checks.push_back(to_check("lie", check_lie(a)));
        if (!rep.ok())
            return;
        g = std::move(a);
    } else if (doc.kind == "leibniz") {
        AlgebraPresentation a = algebra_from_document(doc);
        rep.checks.push_back(to_check("leibniz", check_leibniz(a)));
        if (!rep.ok())
            return;
        g = liezation(a).quotient;
    } else {
        LMLieAlgebra a = lm_algebra_from_document(doc);
        rep.checks.push_back(to_check("lie-degree0", check_lie(a.lie())));
        if (!rep.ok())
            return;
        g = a.lie();
    }

    SeriesMap from_envelope = integrate_lie(*g, opt.order);
    SeriesMap from_dynkin = cbh_dynkin(*g, opt.order);
    const auto& labels = g->basis_names();

    AxiomReport agreement;
    auto describe = [&](const std::pair<PBWMonomial, PBWMonomial>& key, const SparseVec& lhs,
                        const SparseVec& rhs) {
        agreement.violations.push_back({"coefficient",
                                        {},
                                        "(" + key.first.to_string(labels) + "; " +
                                            key.second.to_string(labels) + "): envelope " +
                                            vec_to_string(lhs, labels),
                                        "dynkin " + vec_to_string(rhs, labels)});
    };
    for (const auto& [key, vec] : from_envelope.coeffs) {
        auto it = from_dynkin.coeffs.find(key);
        if (it == from_dynkin.coeffs.end() || it->second != vec)
            describe(key, vec, it == from_dynkin.coeffs.end() ? SparseVec{} : it->second);
    }
    for (const auto& [key, vec] : from_dynkin.coeffs)
        if (!from_envelope.coeffs.contains(key))
            describe(key, SparseVec{}, vec);
    rep.checks.push_back(to_check("cbh-agreement", std::move(agreement)));
    rep.payload["order"] = opt.order;
    rep.payload["series"] = series_json(from_envelope, labels);
}

// generic aligned rendering of the payload, one table per array of flat
// objects, "key: value" lines otherwise
void render_json(std::string& out, const json& j, const std::string& indent) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (value.is_object() || (value.is_array() && !value.empty())) {
                out += indent + key + ":\n";
                render_json(out, value, indent + "  ");
            } else {
                out += indent + key + ": " + (value.is_string() ? value.get<std::string>()
                                                                : value.dump()) +
                       "\n";
            }
        }
        return;
    }
    if (j.is_array()) {
        bool flat = !j.empty();
        for (const auto& item : j)
            if (!item.is_object())
                flat = false;
            else
                for (const auto& [k, v] : item.items())
                    if (v.is_array() || (v.is_object() && k != "coeff"))
                        flat = false;
        if (!flat) {
            for (const auto& item : j)
                render_json(out, item, indent);
            return;
        }
        std::vector<std::string> columns;
        std::map<std::string, std::size_t> width;
        auto cell = [](const json& v) {
            if (v.is_string())
                return v.get<std::string>();
            if (v.is_object()) {
                std::string s;
                for (const auto& [k, val] : v.items()) {
                    if (!s.empty())
                        s += ", ";
                    s += k + ": " + (val.is_string() ? val.get<std::string>() : val.dump());
                }
                return s.empty() ? std::string("0") : s;
            }
            return v.dump();
        };
        for (const auto& item : j)
            for (const auto& [k, v] : item.items()) {
                if (std::find(columns.begin(), columns.end(), k) == columns.end())
                    columns.push_back(k);
                width[k] = std::max({width[k], k.size(), cell(v).size()});
            }
        std::string header = indent;
        for (const auto& c : columns) {
            header += c;
            header += std::string(width[c] - c.size() + 2, ' ');
        }
        out += header + "\n";
        for (const auto& item : j) {
            std::string row = indent;
            for (const auto& c : columns) {
                std::string s = item.contains(c) ? cell(item.at(c)) : "";
                row += s + std::string(width[c] - s.size() + 2, ' ');
            }
            while (!row.empty() && row.back() == ' ')
                row.pop_back();
            out += row + "\n";
        }
        return;
    }
    out += indent + (j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
}

} // namespace

bool RunReport::ok() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.passed; });
}

std::string RunReport::to_json() const {
    json j;
    j["command"] = command;
    j["input"] = json{{"name", input_name}, {"kind", input_kind}, {"digest", input_digest}};
    j["options"] = json{{"order", options.order}, {"degree", options.degree},
                        {"triv", options.triv}};
    json checks_json = json::array();
    for (const auto& c : checks) {
        json violations = json::array();
        for (const auto& v : c.violations)
            violations.push_back(
                json{{"axiom", v.axiom}, {"witness", v.witness}, {"lhs", v.lhs}, {"rhs", v.rhs}});
        checks_json.push_back(
            json{{"name", c.name}, {"passed", c.passed}, {"violations", std::move(violations)}});
    }
    j["checks"] = std::move(checks_json);
    j["payload"] = payload;
    j["status"] = ok() ? "pass" : "fail";
    return j.dump(2) + "\n";
}

std::string RunReport::to_text() const {
    std::string out;
    out += "command: " + command + "\n";
    out += "input: " + input_name + " (" + input_kind + "), digest " + input_digest + "\n";
    out += "options: order=" + std::to_string(options.order) +
           " degree=" + std::to_string(options.degree) + " triv=" + options.triv + "\n";
    for (const auto& c : checks) {
        out += "check " + c.name + ": " + (c.passed ? "ok" : "FAIL") + "\n";
        std::size_t shown = 0;
        for (const auto& v : c.violations) {
            if (shown == 8) {
                out += "    ... " + std::to_string(c.violations.size() - shown) + " more\n";
                break;
            }
            out += "    " + v.axiom + " at (";
            for (std::size_t i = 0; i < v.witness.size(); ++i) {
                if (i)
                    out += ",";
                out += std::to_string(v.witness[i]);
            }
            out += "): " + v.lhs + (v.rhs.empty() ? "" : " != " + v.rhs) + "\n";
            ++shown;
        }
    }
    if (!payload.empty()) {
        out += "result:\n";
        render_json(out, payload, "  ");
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3f", elapsed_seconds);
    out += "elapsed: " + std::string(buf) + "s\n";
    out += "status: " + std::string(ok() ? "pass" : "fail") + "\n";
    return out;
}

RunReport run_command(const std::string& command, const InputDocument& doc,
                      const RunOptions& options) {
    if (options.triv != "left" && options.triv != "sym" && options.triv != "both")
        throw ValidationError("triv must be left, sym or both");
    if (options.order < 1)
        throw ValidationError("order must be at least 1");

    auto start = std::chrono::steady_clock::now();
    RunReport rep;
    rep.command = command;
    rep.input_name = doc.name;
    rep.input_kind = doc.kind;
    rep.input_digest = doc.digest;
    rep.options = options;
    rep.payload = nlohmann::ordered_json::object();

    if (command == "check")
        run_check(rep, doc);
    else if (command == "liezation")
        run_liezation(rep, doc);
    else if (command == "envelope")
        run_envelope(rep, doc, options);
    else if (command == "integrate")
        run_integrate(rep, doc, options);
    else if (command == "oracle")
        run_oracle(rep, doc, options);
    else
        throw ValidationError("unknown command '" + command + "'");

    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

} // namespace coquecigrue
