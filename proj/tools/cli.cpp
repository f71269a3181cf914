#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <deque>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <set>
#include <sstream>

#include "abelforge/abel.hpp"
#include "abelforge/catalog.hpp"
#include "abelforge/errors.hpp"
#include "abelforge/invert.hpp"

namespace abelforge::cli {

namespace {

using json = nlohmann::json;

/// A usage problem: bad flag combination, unknown key, wrong type.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Kind { String, Number, Pair, Count, Params, Flag };

struct KeySpec {
    const char* key;
    const char* flag;
    Kind kind;
    const char* help;
};

// Every configuration key, its flag spelling and its type.
const std::vector<KeySpec>& keySpecs() {
    static const std::vector<KeySpec> specs = {
        {"g", "--g", Kind::String, "dissipation g(u)"},
        {"h", "--h", Kind::String, "nonlinearity h(u)"},
        {"eta", "--eta", Kind::String, "explicit eta(u), skipping classification"},
        {"k", "--k", Kind::Number, "Chiellini constant (default -2)"},
        {"c0", "--c0", Kind::Number, "integration constant when g is given"},
        {"c1", "--c1", Kind::Number, "integration constant when h is given"},
        {"ckBranch", "--root", Kind::String, "root of k c^2 + c + 1 = 0: minus or plus"},
        {"sign", "--sign", Kind::String, "sign in front of the square root: plus or minus"},
        {"interval", "--interval", Kind::Pair, "u interval (lo hi)"},
        {"gridN", "--grid-n", Kind::Count, "classification grid size"},
        {"catalog", "--catalog", Kind::String, "catalog entry name"},
        {"params", "--param", Kind::Params, "catalog parameter as name=value (repeatable)"},
        {"zeta0", "--zeta0", Kind::Number, "base point zeta0"},
        {"u0", "--u0", Kind::Number, "u at zeta0"},
        {"span", "--span", Kind::Pair, "zeta span (lo hi)"},
        {"step", "--step", Kind::Number, "zeta spacing of the samples"},
        {"maxTurningPoints", "--max-turning", Kind::Count, "turning points allowed per direction"},
        {"outputFormat", "--format", Kind::String, "csv or json"},
        {"outputPath", "--output", Kind::String, "write results to this file"},
        {"entry", "--entry", Kind::String, "show a single catalog entry"},
        {"json", "--json", Kind::Flag, "machine-readable listing"},
    };
    return specs;
}

const KeySpec& specFor(const std::string& key) {
    for (const auto& s : keySpecs())
        if (key == s.key) return s;
    throw UsageError("unknown key '" + key + "'");
}

const std::map<std::string, std::set<std::string>>& commandKeys() {
    static const std::map<std::string, std::set<std::string>> keys = {
        {"check", {"g", "h", "interval", "gridN", "outputPath"}},
        {"construct", {"g", "h", "k", "c0", "c1", "ckBranch", "sign", "interval", "outputPath"}},
        {"solve",
         {"g", "h", "eta", "interval", "gridN", "catalog", "params", "zeta0", "u0", "span", "step",
          "maxTurningPoints", "outputFormat", "outputPath"}},
        {"verify",
         {"g", "h", "eta", "interval", "gridN", "catalog", "params", "zeta0", "u0", "span", "step",
          "outputPath"}},
        {"catalog", {"entry", "json", "outputPath"}},
    };
    return keys;
}

// ---------------------------------------------------------------------------
// Config access

void checkType(const std::string& key, const json& v) {
    const auto& spec = specFor(key);
    bool ok = false;
    switch (spec.kind) {
        case Kind::String: ok = v.is_string(); break;
        case Kind::Number: ok = v.is_number(); break;
        case Kind::Pair: ok = v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number(); break;
        case Kind::Count: ok = v.is_number_unsigned() || (v.is_number_integer() && v.get<long long>() >= 0); break;
        case Kind::Params:
            ok = v.is_object() && std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_number(); });
            break;
        case Kind::Flag: ok = v.is_boolean(); break;
    }
    if (!ok) throw UsageError("key '" + key + "' has the wrong type");
}

void validate(const std::string& command, const json& cfg) {
    const auto& allowed = commandKeys().at(command);
    for (const auto& [key, value] : cfg.items()) {
        if (key == "command") continue;
        if (!allowed.count(key)) throw UsageError("'" + key + "' is not accepted by '" + command + "'");
        checkType(key, value);
    }
}

bool has(const json& cfg, const char* key) { return cfg.contains(key); }

double number(const json& cfg, const char* key, double fallback) {
    return has(cfg, key) ? cfg[key].get<double>() : fallback;
}

double requiredNumber(const json& cfg, const char* key) {
    if (!has(cfg, key)) throw UsageError(std::string("missing required '") + specFor(key).flag + "'");
    return cfg[key].get<double>();
}

Interval pair(const json& cfg, const char* key, Interval fallback) {
    if (!has(cfg, key)) return fallback;
    return {cfg[key][0].get<double>(), cfg[key][1].get<double>()};
}

std::string text(const json& cfg, const char* key, const std::string& fallback) {
    return has(cfg, key) ? cfg[key].get<std::string>() : fallback;
}

std::size_t count(const json& cfg, const char* key, std::size_t fallback) {
    return has(cfg, key) ? cfg[key].get<std::size_t>() : fallback;
}

RootChoice rootChoice(const json& cfg) {
    const auto v = text(cfg, "ckBranch", "minus");
    if (v == "minus") return RootChoice::Minus;
    if (v == "plus") return RootChoice::Plus;
    throw UsageError("--root must be 'minus' or 'plus'");
}

Sign sign(const json& cfg) {
    const auto v = text(cfg, "sign", "plus");
    if (v == "plus") return Sign::Plus;
    if (v == "minus") return Sign::Minus;
    throw UsageError("--sign must be 'plus' or 'minus'");
}

json interval(Interval i) { return json::array({i.lo, i.hi}); }

constexpr Interval kDefaultInterval{0.1, 3.0};
constexpr std::size_t kDefaultGrid = 64;

// ---------------------------------------------------------------------------
// Commands. Each returns its exit code and fills `body`.

int cmdCheck(const json& cfg, std::string& body) {
    if (!has(cfg, "g") || !has(cfg, "h")) throw UsageError("check needs both --g and --h");
    const DissipativeOde ode{ScalarField::parse(cfg["g"].get<std::string>()),
                             ScalarField::parse(cfg["h"].get<std::string>())};
    const auto range = pair(cfg, "interval", kDefaultInterval);
    const auto n = count(cfg, "gridN", kDefaultGrid);
    const auto report = classifyChiellini(ode, range, n);
    json j;
    j["g"] = ode.g.render();
    j["h"] = ode.h.render();
    j["interval"] = interval(range);
    j["gridN"] = n;
    j["pointsUsed"] = report.gridUsed.size();
    j["k"] = report.k;
    j["residual"] = report.residual;
    j["verdict"] = toString(report.verdict);
    j["ckRoots"] = report.ckRoots;
    body = j.dump(2) + "\n";
    switch (report.verdict) {
        case Verdict::Integrable: return kSuccess;
        case Verdict::NotIntegrable: return kNotIntegrable;
        case Verdict::Indeterminate: return kIndeterminate;
    }
    return kError;
}

json renderedOrNull(const ScalarField& f) {
    if (isRenderable(f.expr())) return f.render();
    return nullptr;
}

int cmdConstruct(const json& cfg, std::string& body) {
    const bool fromG = has(cfg, "g");
    if (fromG == has(cfg, "h")) throw UsageError("construct needs exactly one of --g and --h");
    if (fromG && (has(cfg, "c1") || has(cfg, "sign")))
        throw UsageError("--c1 and --sign apply only when --h is given");
    if (!fromG && has(cfg, "c0")) throw UsageError("--c0 applies only when --g is given");

    const double k = number(cfg, "k", -2.0);
    const auto working = pair(cfg, "interval", {0.0, 1.0});
    const EtaField eta =
        fromG ? etaFromG(ScalarField::parse(cfg["g"].get<std::string>()), k, number(cfg, "c0", 0.0),
                         rootChoice(cfg), working)
              : etaFromH(ScalarField::parse(cfg["h"].get<std::string>()), k, number(cfg, "c1", 0.0),
                         rootChoice(cfg), sign(cfg), working);

    json j;
    j["provenance"] = toString(eta.provenance);
    j["constants"] = eta.constants;
    j["g"] = renderedOrNull(eta.ode.g);
    j["h"] = renderedOrNull(eta.ode.h);
    j["eta"] = renderedOrNull(eta.eta);
    j["working"] = interval(working);
    if (eta.admissible) j["admissible"] = interval(*eta.admissible);
    if (j["g"].is_null() || j["h"].is_null() || j["eta"].is_null()) {
        // The antiderivative had no closed form; tabulate instead.
        const auto grid = uniformGrid(eta.admissible.value_or(working), 101);
        json rows = json::array();
        for (double u : grid) {
            json row{{"u", u}};
            for (const auto& [name, field] :
                 {std::pair{"g", &eta.ode.g}, std::pair{"h", &eta.ode.h}, std::pair{"eta", &eta.eta}}) {
                try {
                    row[name] = field->value(u);
                } catch (const DomainError&) {
                    row[name] = nullptr;
                }
            }
            rows.push_back(row);
        }
        j["tabulation"] = rows;
    }
    body = j.dump(2) + "\n";
    return kSuccess;
}

/// The problem a solve or verify job runs on.
struct Problem {
    EtaField eta;
    std::optional<catalog::CatalogEntry> entry;
    Interval working;
};

Problem problemFrom(const json& cfg) {
    Problem p;
    if (has(cfg, "catalog")) {
        for (const char* key : {"g", "h", "eta", "interval", "gridN"})
            if (has(cfg, key))
                throw UsageError(std::string(specFor(key).flag) + " cannot be combined with --catalog");
        std::map<std::string, double> params;
        if (has(cfg, "params"))
            for (const auto& [name, value] : cfg["params"].items()) params[name] = value.get<double>();
        try {
            p.entry = catalog::make(cfg["catalog"].get<std::string>(), params);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        p.eta = p.entry->eta;
        p.working = p.entry->working;
        return p;
    }
    if (has(cfg, "params")) throw UsageError("--param requires --catalog");
    if (!has(cfg, "g") || !has(cfg, "h")) throw UsageError("give --catalog or both --g and --h");
    const DissipativeOde ode{ScalarField::parse(cfg["g"].get<std::string>()),
                             ScalarField::parse(cfg["h"].get<std::string>())};
    p.working = pair(cfg, "interval", kDefaultInterval);
    if (has(cfg, "eta")) {
        p.eta.eta = ScalarField::parse(cfg["eta"].get<std::string>());
        p.eta.ode = ode;
        return p;
    }
    const auto report = classifyChiellini(ode, p.working, count(cfg, "gridN", kDefaultGrid));
    if (report.verdict != Verdict::Integrable)
        throw Error(std::string("the ODE is not Chiellini-integrable on the interval (verdict ") +
                    toString(report.verdict) + ", residual " + std::to_string(report.residual) + ")");
    p.eta = lemma2Eta(ode, report.k);
    return p;
}

struct Run {
    double zeta0;
    double u0;
    Interval span;
    double step;
};

Run runFrom(const json& cfg, const Problem& p, double defaultStep) {
    Run r{};
    if (p.entry) {
        const auto& s = p.entry->scenario;
        r.zeta0 = number(cfg, "zeta0", s.zeta0);
        r.u0 = number(cfg, "u0", s.u0);
        r.span = pair(cfg, "span", s.span);
    } else {
        r.zeta0 = number(cfg, "zeta0", 0.0);
        r.u0 = requiredNumber(cfg, "u0");
        r.span = pair(cfg, "span", {r.zeta0, r.zeta0 + 2.0});
    }
    r.step = number(cfg, "step", defaultStep);
    if (!(r.step > 0.0)) throw UsageError("--step must be positive");
    if (r.span.hi < r.span.lo) throw UsageError("--span must be given as lo hi with lo <= hi");
    return r;
}

std::string formatCsv(const SolutionCurve& curve) {
    std::string out = "zeta,u,uprime\n";
    char line[96];
    for (const auto& s : curve.samples) {
        std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g\n", s.zeta, s.u, s.uPrime);
        out += line;
    }
    return out;
}

int cmdSolve(const json& cfg, std::string& body) {
    const auto format = text(cfg, "outputFormat", "csv");
    if (format != "csv" && format != "json") throw UsageError("--format must be 'csv' or 'json'");
    const auto problem = problemFrom(cfg);
    const auto r = runFrom(cfg, problem, 0.01);
    InvertOptions opt;
    opt.maxTurningPoints = static_cast<int>(count(cfg, "maxTurningPoints", 8));
    const auto curve = invert(problem.eta, r.zeta0, r.u0, r.span, r.step, opt);
    if (format == "csv") {
        body = formatCsv(curve);
        return kSuccess;
    }
    json j;
    j["eta"] = isRenderable(problem.eta.eta.expr()) ? json(problem.eta.eta.render()) : json(nullptr);
    j["baseZeta"] = curve.baseZeta;
    j["baseU"] = curve.baseU;
    json samples = json::array();
    for (const auto& s : curve.samples) samples.push_back({{"zeta", s.zeta}, {"u", s.u}, {"uprime", s.uPrime}});
    j["samples"] = samples;
    json events = json::array();
    for (const auto& e : curve.events)
        events.push_back({{"zeta", e.zeta}, {"kind", toString(e.kind)}, {"u", e.u}});
    j["events"] = events;
    body = j.dump(2) + "\n";
    return kSuccess;
}

// Built-in verification tolerances.
constexpr double kInvertTol = 1e-5;
constexpr double kClosedFormTol = 1e-6;
constexpr double kAbelTol = 1e-8;

int cmdVerify(const json& cfg, std::string& body) {
    const auto problem = problemFrom(cfg);
    const auto r = runFrom(cfg, problem, 1e-3);
    const auto& eta = problem.eta;

    const auto inv = invert(eta, r.zeta0, r.u0, r.span, r.step);
    const auto rk = rk4Reference(eta.ode, r.zeta0, r.u0, eta.eta.value(r.u0), r.span, r.step);
    // Compare on the monotone stretch through zeta0; past a turning point the
    // inverted curve follows the reflected branch.
    double lo = -INFINITY, hi = INFINITY;
    for (const auto& e : inv.events) {
        if (e.zeta <= r.zeta0) lo = std::max(lo, e.zeta);
        if (e.zeta > r.zeta0) hi = std::min(hi, e.zeta);
    }
    double deviation = 0.0;
    std::size_t compared = 0;
    for (const auto& s : inv.samples) {
        if (s.zeta < lo || s.zeta > hi) continue;
        const auto it = std::lower_bound(rk.samples.begin(), rk.samples.end(), s.zeta,
                                         [](const CurveSample& a, double z) { return a.zeta < z; });
        if (it == rk.samples.end() || it->zeta != s.zeta) continue;
        deviation = std::max(deviation, std::abs(it->u - s.u));
        ++compared;
    }

    json j;
    if (problem.entry) {
        j["entry"] = problem.entry->name;
        j["parameters"] = problem.entry->parameters;
    }
    j["eta"] = isRenderable(eta.eta.expr()) ? json(eta.eta.render()) : json(nullptr);
    j["span"] = interval(r.span);
    j["step"] = r.step;
    j["comparedSamples"] = compared;
    j["invertVsRk4"] = deviation;
    bool pass = deviation <= kInvertTol && compared > 0;

    if (problem.entry && problem.entry->closedForm) {
        const auto& cf = *problem.entry->closedForm;
        const auto& ode = problem.entry->ode;
        double residual = 0.0;
        for (double z : uniformGrid(cf.sampleWindow, 200)) {
            const double u = cf.u(z);
            residual = std::max(residual, std::abs(cf.d2u(z) + ode.g.value(u) * cf.du(z) + ode.h.value(u)));
        }
        j["closedFormResidual"] = residual;
        pass = pass && residual <= kClosedFormTol;
    } else {
        j["closedFormResidual"] = nullptr;
    }
    const double abel = maxAbelResidual(eta, uniformGrid(problem.working, 200));
    j["abelResidual"] = abel;
    pass = pass && abel <= kAbelTol;
    j["tolerances"] = {{"invertVsRk4", kInvertTol}, {"closedFormResidual", kClosedFormTol}, {"abelResidual", kAbelTol}};
    j["result"] = pass ? "PASS" : "FAIL";
    body = j.dump(2) + "\n";
    return pass ? kSuccess : kVerifyFailed;
}

json entryJson(const catalog::EntryDoc& d) {
    json params = json::array();
    for (const auto& p : d.parameters)
        params.push_back({{"name", p.name}, {"description", p.description}, {"default", p.defaultValue}});
    return {{"name", d.name}, {"equation", d.equation}, {"parameters", params},
            {"closedForms", d.closedForms}, {"figures", d.figures}};
}

int cmdCatalog(const json& cfg, std::string& body) {
    std::vector<const catalog::EntryDoc*> docs;
    for (const auto& d : catalog::entries())
        if (!has(cfg, "entry") || d.name == cfg["entry"].get<std::string>()) docs.push_back(&d);
    if (docs.empty()) throw UsageError("unknown catalog entry '" + cfg["entry"].get<std::string>() + "'");

    if (has(cfg, "json") && cfg["json"].get<bool>()) {
        json j = json::array();
        for (const auto* d : docs) j.push_back(entryJson(*d));
        body = j.dump(2) + "\n";
        return kSuccess;
    }
    std::ostringstream os;
    for (const auto* d : docs) {
        os << d->name << "\n  " << d->equation << "\n";
        for (const auto& p : d->parameters)
            os << "  parameter " << p.name << " (default " << p.defaultValue << "): " << p.description << "\n";
        for (const auto& c : d->closedForms) os << "  closed form " << c << "\n";
        for (const auto& f : d->figures) os << "  figure " << f << "\n";
    }
    body = os.str();
    return kSuccess;
}

// ---------------------------------------------------------------------------
// Flag parsing

/// Storage for one flag; `to` converts it into config JSON when given.
struct Slot {
    const KeySpec* spec;
    CLI::App* owner = nullptr;
    CLI::Option* option = nullptr;
    std::string s;
    double d = 0.0;
    std::vector<double> v;
    std::size_t n = 0;
    std::vector<std::string> list;
    bool b = false;

    json value() const {
        switch (spec->kind) {
            case Kind::String: return s;
            case Kind::Number: return d;
            case Kind::Pair: return v;
            case Kind::Count: return n;
            case Kind::Flag: return b;
            case Kind::Params: {
                json obj = json::object();
                for (const auto& item : list) {
                    const auto eq = item.find('=');
                    if (eq == std::string::npos || eq == 0)
                        throw UsageError("--param expects name=value, got '" + item + "'");
                    const std::string value = item.substr(eq + 1);
                    char* end = nullptr;
                    const double x = std::strtod(value.c_str(), &end);
                    if (value.empty() || *end != '\0' || !std::isfinite(x))
                        throw UsageError("--param value is not a number: '" + item + "'");
                    obj[item.substr(0, eq)] = x;
                }
                return obj;
            }
        }
        return nullptr;
    }
};

void addSlot(CLI::App* app, std::deque<Slot>& slots, const KeySpec& spec) {
    auto& slot = slots.emplace_back();
    slot.spec = &spec;
    slot.owner = app;
    switch (spec.kind) {
        case Kind::String: slot.option = app->add_option(spec.flag, slot.s, spec.help); break;
        case Kind::Number: slot.option = app->add_option(spec.flag, slot.d, spec.help); break;
        case Kind::Pair: slot.option = app->add_option(spec.flag, slot.v, spec.help)->expected(2); break;
        case Kind::Count: slot.option = app->add_option(spec.flag, slot.n, spec.help); break;
        case Kind::Params: slot.option = app->add_option(spec.flag, slot.list, spec.help); break;
        case Kind::Flag: slot.option = app->add_flag(spec.flag, slot.b, spec.help); break;
    }
}

json readConfig(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config file '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw UsageError("config file '" + path + "' is not valid JSON: " + e.what());
    }
    if (!j.is_object()) throw UsageError("config file must hold a JSON object");
    return j;
}

/// Writes the result atomically: a temporary file renamed into place.
void writeOutput(const std::string& path, const std::string& body) {
    const std::filesystem::path target(path);
    auto tmp = target;
    tmp += ".partial";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw Error("cannot open output file '" + path + "'");
        os << body;
        os.flush();
        if (!os) {
            os.close();
            std::filesystem::remove(tmp);
            throw Error("failed writing output file '" + path + "'");
        }
    }
    std::filesystem::rename(tmp, target);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Chiellini-integrable dissipative ODEs through Abel equations", "abelforge"};
    // "-h" would clash with --h, the nonlinearity.
    app.set_help_flag("--help", "print this help");
    app.require_subcommand(0, 1);
    std::string topConfig;
    app.add_option("--config", topConfig, "JSON job file naming its command");

    std::deque<Slot> slots;
    std::map<std::string, std::pair<CLI::App*, std::string*>> subs;
    std::deque<std::string> subConfigs;
    const std::map<std::string, std::string> descriptions = {
        {"check", "classify (g, h) by the Chiellini condition"},
        {"construct", "build eta and the missing coefficient from g or h"},
        {"solve", "sample u(zeta) by quadrature inversion"},
        {"verify", "cross-check inversion, RK4, closed form and the Abel residual"},
        {"catalog", "list the built-in families"},
    };
    for (const auto& [name, keys] : commandKeys()) {
        auto* sub = app.add_subcommand(name, descriptions.at(name));
        sub->set_help_flag("--help", "print this help");
        auto& cfgPath = subConfigs.emplace_back();
        sub->add_option("--config", cfgPath, "JSON job file; flags override its values");
        for (const auto& spec : keySpecs())
            if (keys.count(spec.key)) addSlot(sub, slots, spec);
        subs[name] = {sub, &cfgPath};
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "abelforge: " << e.what() << "\n";
        return kError;
    }

    std::string body;
    std::string command;
    json cfg = json::object();
    int code = kError;
    try {
        for (const auto& [name, sub] : subs)
            if (sub.first->parsed()) command = name;
        if (!topConfig.empty()) {
            if (!command.empty()) throw UsageError("top-level --config cannot be combined with a subcommand");
            cfg = readConfig(topConfig);
            if (!cfg.contains("command") || !cfg["command"].is_string())
                throw UsageError("config file must name its \"command\"");
            command = cfg["command"].get<std::string>();
            if (!commandKeys().count(command)) throw UsageError("unknown command '" + command + "'");
        } else if (command.empty()) {
            out << app.help();
            return kError;
        } else if (!subs[command].second->empty()) {
            cfg = readConfig(*subs[command].second);
            if (cfg.contains("command") && cfg["command"] != command)
                throw UsageError("config file is for command '" + cfg["command"].dump() + "'");
        }
        // Flags override file values.
        for (const auto& slot : slots)
            if (slot.option->count() > 0 && slot.owner == subs[command].first)
                cfg[slot.spec->key] = slot.value();
        validate(command, cfg);

        if (command == "check")
            code = cmdCheck(cfg, body);
        else if (command == "construct")
            code = cmdConstruct(cfg, body);
        else if (command == "solve")
            code = cmdSolve(cfg, body);
        else if (command == "verify")
            code = cmdVerify(cfg, body);
        else
            code = cmdCatalog(cfg, body);

        std::string path = text(cfg, "outputPath", "");
        if (path.empty())
            if (const char* env = std::getenv("ABELFORGE_OUT")) path = env;
        if (path.empty())
            out << body;
        else
            writeOutput(path, body);
    } catch (const UsageError& e) {
        err << "abelforge: " << e.what() << "\n";
        return kError;
    } catch (const ParseError& e) {
        err << "abelforge: parse error: " << e.what() << "\n";
        return kError;
    } catch (const std::exception& e) {
        err << "abelforge: " << e.what() << "\n";
        return kError;
    }
    return code;
}

}  // namespace abelforge::cli
