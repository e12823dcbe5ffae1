#include "dcvopt/problem_file.hpp"
#include "dcvopt/pareto.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace dcvopt {

ParseError::ParseError(std::size_t line, const std::string& message)
    : Error(line ? "line " + std::to_string(line) + ": " + message : message), line_(line)
{
}

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

struct Entry {
    std::string key;
    std::string value;
    std::size_t line;
};

struct Section {
    std::size_t line = 0;
    std::vector<Entry> entries;
};

const std::map<std::string, std::set<std::string>>& known_keys()
{
    static const std::map<std::string, std::set<std::string>> keys{
        {"spaces", {"x_dim", "y_dim", "z_dim"}},
        {"cones", {"K", "D"}},
        {"map F", {"coord", "except"}},
        {"map G", {"coord", "except"}},
        {"map H", {"coord", "except"}},
        {"map S", {"coord", "except"}},
        {"set", {"lower", "upper"}},
        {"point", {"xbar", "eps"}},
        {"candidates", {"T", "L"}},
        {"options", {"grid", "radius", "dilation", "correction", "lambdas"}},
    };
    return keys;
}

bool repeatable(const std::string& key)
{
    return key == "coord" || key == "except" || key == "T" || key == "L" || key == "correction";
}

std::map<std::string, Section> split_sections(std::string_view text)
{
    std::map<std::string, Section> sections;
    Section* current = nullptr;
    std::set<std::pair<std::string, std::string>> seen_keys;
    std::string current_name;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (const auto hash = raw.find('#'); hash != std::string_view::npos)
            raw = raw.substr(0, hash);
        const std::string_view line = trim(raw);
        if (line.empty())
            continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ParseError(line_no, "unterminated section header");
            std::string name(trim(line.substr(1, line.size() - 2)));
            if (!known_keys().contains(name))
                throw ParseError(line_no, "unknown section [" + name + "]");
            if (sections.contains(name))
                throw ParseError(line_no, "duplicate section [" + name + "]");
            current = &sections[name];
            current->line = line_no;
            current_name = name;
            continue;
        }
        if (!current)
            throw ParseError(line_no, "entry outside of any section");
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ParseError(line_no, "expected 'key = value'");
        std::string key(trim(line.substr(0, eq)));
        std::string value(trim(line.substr(eq + 1)));
        if (!known_keys().at(current_name).contains(key))
            throw ParseError(line_no, "unknown key '" + key + "' in [" + current_name + "]");
        if (value.empty())
            throw ParseError(line_no, "empty value for '" + key + "'");
        if (!repeatable(key) && !seen_keys.insert({current_name, key}).second)
            throw ParseError(line_no, "duplicate key '" + key + "' in [" + current_name + "]");
        current->entries.push_back(Entry{std::move(key), std::move(value), line_no});
    }
    return sections;
}

// Runs f, converting library errors into ParseError at the entry's line.
template <typename Fn>
auto at_line(std::size_t line, Fn&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(line, e.what());
    }
}

const Entry* find(const Section* s, const std::string& key)
{
    if (!s)
        return nullptr;
    for (const auto& e : s->entries)
        if (e.key == key)
            return &e;
    return nullptr;
}

const Entry& require(const std::map<std::string, Section>& sections, const std::string& section,
                     const std::string& key)
{
    const auto it = sections.find(section);
    if (it == sections.end())
        throw ParseError(0, "missing section [" + section + "]");
    const Entry* e = find(&it->second, key);
    if (!e)
        throw ParseError(it->second.line, "missing key '" + key + "' in [" + section + "]");
    return *e;
}

std::size_t parse_count(const Entry& e, std::size_t min)
{
    const Rational r = at_line(e.line, [&] { return parse_rational(e.value); });
    if (denominator(r) != 1 || r < static_cast<long>(min) || r > 1000000)
        throw ParseError(e.line, "'" + e.key + "' must be an integer >= " + std::to_string(min));
    return static_cast<std::size_t>(numerator(r).convert_to<long>());
}

RationalVector parse_dim_vector(const Entry& e, std::size_t dim)
{
    RationalVector v = at_line(e.line, [&] { return parse_vector(e.value); });
    if (v.dim() != dim)
        throw ParseError(e.line, "'" + e.key + "' needs " + std::to_string(dim) + " coordinates, got "
                                     + std::to_string(v.dim()));
    return v;
}

std::vector<Rational> parse_list(const Entry& e)
{
    const RationalVector v = at_line(e.line, [&] { return parse_vector(e.value); });
    return {v.begin(), v.end()};
}

PolyhedralCone parse_cone(const Entry& e, std::size_t dim)
{
    const LinearOperator m = at_line(e.line, [&] { return parse_matrix(e.value); });
    if (m.cols() != dim)
        throw ParseError(e.line, "generators of " + e.key + " must have " + std::to_string(dim) + " coordinates");
    std::vector<RationalVector> gens;
    for (std::size_t r = 0; r < m.rows(); ++r)
        gens.push_back(m.row(r));
    return at_line(e.line, [&] { return PolyhedralCone(std::move(gens)); });
}

VectorMap parse_map(const std::map<std::string, Section>& sections, const std::string& name, std::size_t in_dim,
                    std::size_t out_dim)
{
    const auto it = sections.find("map " + name);
    if (it == sections.end())
        return VectorMap::zero(in_dim, out_dim);
    std::vector<Polynomial> coords;
    std::vector<ExceptionalPoint> exceptions;
    for (const auto& e : it->second.entries) {
        if (e.key == "coord") {
            coords.push_back(at_line(e.line, [&] { return parse_polynomial(e.value, in_dim); }));
        } else {
            const auto arrow = e.value.find("->");
            if (arrow == std::string::npos)
                throw ParseError(e.line, "expected 'except = <point> -> <value>'");
            Entry p{e.key, e.value.substr(0, arrow), e.line};
            Entry v{e.key, e.value.substr(arrow + 2), e.line};
            exceptions.push_back(ExceptionalPoint{parse_dim_vector(p, in_dim), parse_dim_vector(v, out_dim)});
        }
    }
    if (coords.size() != out_dim)
        throw ParseError(it->second.line, "map " + name + " needs " + std::to_string(out_dim)
                                              + " coord entries, got " + std::to_string(coords.size()));
    return at_line(it->second.line, [&] { return VectorMap(in_dim, std::move(coords), std::move(exceptions)); });
}

std::vector<LinearOperator> parse_candidates(const Section* s, const std::string& key, std::size_t rows,
                                             std::size_t cols)
{
    std::vector<LinearOperator> out;
    if (!s)
        return out;
    for (const auto& e : s->entries) {
        if (e.key != key)
            continue;
        LinearOperator m = at_line(e.line, [&] { return parse_matrix(e.value); });
        if (m.rows() != rows || m.cols() != cols)
            throw ParseError(e.line, key + " must be a " + std::to_string(rows) + " x " + std::to_string(cols)
                                         + " matrix");
        out.push_back(std::move(m));
    }
    return out;
}

std::string join(const RationalVector& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (i)
            s += ", ";
        s += to_string(v[i]);
    }
    return s;
}

std::string join(const std::vector<Rational>& v)
{
    return join(RationalVector(v));
}

std::string rows_of(const std::vector<RationalVector>& rows)
{
    std::string s;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i)
            s += "; ";
        s += join(rows[i]);
    }
    return s;
}

} // namespace

ProblemFile parse_problem(std::string_view text)
{
    const auto sections = split_sections(text);
    auto section = [&](const std::string& name) -> const Section* {
        const auto it = sections.find(name);
        return it == sections.end() ? nullptr : &it->second;
    };

    const std::size_t x_dim = parse_count(require(sections, "spaces", "x_dim"), 1);
    const std::size_t y_dim = parse_count(require(sections, "spaces", "y_dim"), 1);
    const std::size_t z_dim = parse_count(require(sections, "spaces", "z_dim"), 1);

    const Entry& lower = require(sections, "set", "lower");
    const Entry& upper = require(sections, "set", "upper");
    const RationalVector lo = parse_dim_vector(lower, x_dim);
    const RationalVector hi = parse_dim_vector(upper, x_dim);
    BoxSet c = at_line(lower.line, [&] { return BoxSet(lo, hi); });

    const Entry* eps_entry = find(section("point"), "eps");

    ProblemFile file{
        DCProblem{x_dim, y_dim, z_dim, parse_map(sections, "F", x_dim, y_dim), parse_map(sections, "G", x_dim, y_dim),
                  parse_map(sections, "H", x_dim, z_dim), parse_map(sections, "S", x_dim, z_dim), std::move(c),
                  parse_cone(require(sections, "cones", "K"), y_dim),
                  parse_cone(require(sections, "cones", "D"), z_dim),
                  eps_entry ? parse_dim_vector(*eps_entry, y_dim) : RationalVector::zero(y_dim),
                  parse_dim_vector(require(sections, "point", "xbar"), x_dim)},
        parse_candidates(section("candidates"), "T", y_dim, x_dim),
        parse_candidates(section("candidates"), "L", z_dim, x_dim),
        ProblemOptions{}};

    if (const Section* opts = section("options")) {
        auto& o = file.options;
        o.corrections.clear();
        for (const auto& e : opts->entries) {
            if (e.key == "grid") {
                o.grid = parse_count(e, 2);
            } else if (e.key == "radius") {
                o.radius = at_line(e.line, [&] { return parse_rational(e.value); });
                if (o.radius <= 0)
                    throw ParseError(e.line, "radius must be positive");
            } else if (e.key == "dilation") {
                o.dilation = parse_list(e);
                at_line(e.line, [&] { return DilationFamily(o.dilation); });
            } else if (e.key == "lambdas") {
                o.lambdas = parse_list(e);
                for (const auto& l : o.lambdas)
                    if (l <= 0 || l >= 1)
                        throw ParseError(e.line, "lambdas must lie in (0,1)");
            } else {
                const auto bar = e.value.find('|');
                if (bar == std::string::npos)
                    throw ParseError(e.line, "expected 'correction = <alpha> | <beta>'");
                Entry a{e.key, e.value.substr(0, bar), e.line};
                Entry b{e.key, e.value.substr(bar + 1), e.line};
                o.corrections.emplace_back(parse_dim_vector(a, y_dim), parse_dim_vector(b, z_dim));
            }
        }
    }

    file.problem.validate();
    for (const auto& [alpha, beta] : file.options.corrections) {
        if (!cone_contains(file.problem.K, alpha, true))
            throw PreconditionViolation("correction alpha not in int K");
        if (!cone_contains(file.problem.D, beta, true))
            throw PreconditionViolation("correction beta not in int D");
    }
    return file;
}

ProblemFile load_problem(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open problem file " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_problem(ss.str());
}

std::string write_problem(const ProblemFile& file)
{
    const DCProblem& p = file.problem;
    std::ostringstream out;
    out << "[spaces]\n"
        << "x_dim = " << p.x_dim << "\n"
        << "y_dim = " << p.y_dim << "\n"
        << "z_dim = " << p.z_dim << "\n\n"
        << "[cones]\n"
        << "K = " << rows_of(p.K.generators()) << "\n"
        << "D = " << rows_of(p.D.generators()) << "\n";
    const std::pair<const char*, const VectorMap*> maps[] = {{"F", &p.F}, {"G", &p.G}, {"H", &p.H}, {"S", &p.S}};
    for (const auto& [name, map] : maps) {
        out << "\n[map " << name << "]\n";
        for (const auto& c : map->coords())
            out << "coord = " << c.str() << "\n";
        for (const auto& e : map->exceptions())
            out << "except = " << join(e.point) << " -> " << join(e.value) << "\n";
    }
    out << "\n[set]\n"
        << "lower = " << join(p.C.lower) << "\n"
        << "upper = " << join(p.C.upper) << "\n\n"
        << "[point]\n"
        << "xbar = " << join(p.xbar) << "\n"
        << "eps = " << join(p.eps) << "\n";
    if (!file.candidates_t.empty() || !file.candidates_l.empty()) {
        out << "\n[candidates]\n";
        for (const auto& t : file.candidates_t)
            out << "T = " << t.str() << "\n";
        for (const auto& l : file.candidates_l)
            out << "L = " << l.str() << "\n";
    }
    const auto& o = file.options;
    out << "\n[options]\n"
        << "grid = " << o.grid << "\n"
        << "radius = " << to_string(o.radius) << "\n"
        << "dilation = " << join(o.dilation) << "\n"
        << "lambdas = " << join(o.lambdas) << "\n";
    for (const auto& [alpha, beta] : o.corrections)
        out << "correction = " << join(alpha) << " | " << join(beta) << "\n";
    return out.str();
}

} // namespace dcvopt
