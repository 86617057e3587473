#include "schurlab/catalog.hpp"

#include <regex>

#include <json.hpp>

#include "schurlab/errors.hpp"

namespace schurlab {

namespace detail {
extern const char* const kCatalogJson;
}

namespace {

struct DataEntry {
    std::string name;
    std::size_t dim = 0;
    std::vector<std::string> parameter_names;
    std::map<std::string, std::vector<Scalar>> samples;
    struct Term {
        std::string coefficient;
        std::size_t generator;
    };
    struct Rule {
        std::size_t i, j;
        std::vector<Term> rhs;
    };
    std::vector<Rule> rules;
    AssertedInvariants asserted;
};

const std::vector<DataEntry>& data_entries() {
    static const std::vector<DataEntry> entries = [] {
        std::vector<DataEntry> out;
        const auto doc = nlohmann::json::parse(detail::kCatalogJson);
        for (const auto& item : doc.at("entries")) {
            DataEntry e;
            e.name = item.at("name").get<std::string>();
            e.dim = item.at("dim").get<std::size_t>();
            for (const auto& p : item.at("parameters")) {
                const auto pname = p.at("name").get<std::string>();
                e.parameter_names.push_back(pname);
                for (const auto& s : p.at("samples")) e.samples[pname].push_back(parse_scalar(s.get<std::string>()));
            }
            for (const auto& b : item.at("brackets")) {
                DataEntry::Rule rule{b.at("lhs").at(0).get<std::size_t>() - 1,
                                     b.at("lhs").at(1).get<std::size_t>() - 1,
                                     {}};
                for (const auto& t : b.at("rhs"))
                    rule.rhs.push_back({t.at(0).get<std::string>(), t.at(1).get<std::size_t>() - 1});
                e.rules.push_back(std::move(rule));
            }
            const auto& a = item.at("asserted");
            e.asserted = {a.at("n").get<std::size_t>(), a.at("m").get<std::size_t>(),
                          a.at("c").get<std::size_t>()};
            out.push_back(std::move(e));
        }
        return out;
    }();
    return entries;
}

const DataEntry* find_data_entry(const std::string& name) {
    for (const auto& e : data_entries())
        if (e.name == name) return &e;
    return nullptr;
}

AssertedInvariants computed_invariants(const LieAlgebra& algebra) {
    validate(algebra);
    const SeriesReport info = series(algebra);
    return {info.n, info.derived_dim, info.nilpotency_class};
}

void check_invariants(const std::string& name, const LieAlgebra& algebra, const AssertedInvariants& asserted) {
    const AssertedInvariants got = computed_invariants(algebra);
    if (!(got == asserted))
        throw InvariantMismatch(name + ": computed (n,m,c) = (" + std::to_string(got.n) + "," +
                                std::to_string(got.m) + "," + std::to_string(got.c) + "), asserted (" +
                                std::to_string(asserted.n) + "," + std::to_string(asserted.m) + "," +
                                std::to_string(asserted.c) + ")");
}

CatalogEntry build_data_entry(const DataEntry& data, std::map<std::string, Scalar> parameters) {
    CatalogEntry entry;
    entry.base = data.name;
    entry.name = data.name;
    for (const auto& pname : data.parameter_names) {
        auto it = parameters.find(pname);
        if (it == parameters.end()) throw MissingParameter(data.name + " needs parameter '" + pname + "'");
        entry.parameters[pname] = it->second;
    }
    if (!entry.parameters.empty()) {
        entry.name += "(";
        bool first = true;
        for (const auto& pname : data.parameter_names) {
            if (!first) entry.name += ",";
            entry.name += to_string(entry.parameters.at(pname));
            first = false;
        }
        entry.name += ")";
    }

    std::vector<BracketRule> rules;
    for (const auto& rule : data.rules) {
        std::vector<SparseVector::Entry> terms;
        for (const auto& term : rule.rhs) {
            auto it = entry.parameters.find(term.coefficient);
            Scalar value = it != entry.parameters.end() ? it->second : parse_scalar(term.coefficient);
            terms.emplace_back(term.generator, value);
        }
        rules.push_back({rule.i, rule.j, SparseVector::from_terms(std::move(terms))});
    }
    entry.algebra = LieAlgebra::from_rules(data.dim, rules, entry.name);
    entry.asserted = data.asserted;
    check_invariants(entry.name, entry.algebra, entry.asserted);
    return entry;
}

CatalogEntry build_component(const std::string& raw, const std::map<std::string, Scalar>& parameters) {
    static const std::regex abelian_re(R"(^A\(?(\d+)\)?$)");
    static const std::regex heisenberg_re(R"(^H\(?(\d+)\)?$)");
    static const std::regex data_re(R"(^L(\d+)[_,](\d+)(?:\((.*)\))?$)");
    std::smatch match;
    if (std::regex_match(raw, match, abelian_re)) {
        const std::size_t n = std::stoul(match[1]);
        CatalogEntry entry;
        entry.base = entry.name = "A" + std::to_string(n);
        entry.algebra = abelian(n);
        entry.asserted = {n, 0, n > 0 ? 1u : 0u};
        entry.abelian_summand = n;
        check_invariants(entry.name, entry.algebra, entry.asserted);
        return entry;
    }
    if (std::regex_match(raw, match, heisenberg_re)) {
        const std::size_t m = std::stoul(match[1]);
        if (m == 0) throw UnknownName("H0 is not a Heisenberg algebra");
        CatalogEntry entry;
        entry.base = entry.name = "H" + std::to_string(m);
        entry.algebra = heisenberg(m);
        entry.asserted = {2 * m + 1, 1, 2};
        check_invariants(entry.name, entry.algebra, entry.asserted);
        return entry;
    }
    if (std::regex_match(raw, match, data_re)) {
        const std::string base = "L" + match[1].str() + "_" + match[2].str();
        const DataEntry* data = find_data_entry(base);
        if (data == nullptr) throw UnknownName("unknown catalog algebra '" + raw + "'");
        std::map<std::string, Scalar> values = parameters;
        if (match[3].matched) {
            std::string inline_args = match[3].str();
            std::size_t index = 0;
            std::size_t start = 0;
            while (start <= inline_args.size()) {
                std::size_t comma = inline_args.find(',', start);
                std::string arg = inline_args.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
                std::string key;
                if (auto eq = arg.find('='); eq != std::string::npos) {
                    key = arg.substr(0, eq);
                    arg = arg.substr(eq + 1);
                } else {
                    if (index >= data->parameter_names.size())
                        throw UnknownName(base + " takes " + std::to_string(data->parameter_names.size()) + " parameters");
                    key = data->parameter_names[index];
                }
                values[key] = parse_scalar(arg);
                ++index;
                if (comma == std::string::npos) break;
                start = comma + 1;
            }
        }
        return build_data_entry(*data, values);
    }
    throw UnknownName("unknown catalog algebra '" + raw + "'");
}

std::vector<std::string> split_sum(const std::string& name) {
    std::string normalized;
    for (std::size_t i = 0; i < name.size(); ++i) {
        // U+2295 (circled plus) and U+2A01
        if (name.compare(i, 3, "\xE2\x8A\x95") == 0) {
            normalized += '+';
            i += 2;
        } else if (!std::isspace(static_cast<unsigned char>(name[i]))) {
            normalized += name[i];
        }
    }
    std::vector<std::string> parts;
    std::size_t depth = 0, start = 0;
    for (std::size_t i = 0; i < normalized.size(); ++i) {
        if (normalized[i] == '(') ++depth;
        if (normalized[i] == ')' && depth > 0) --depth;
        if (normalized[i] == '+' && depth == 0) {
            parts.push_back(normalized.substr(start, i - start));
            start = i + 1;
        }
    }
    parts.push_back(normalized.substr(start));
    for (const auto& p : parts)
        if (p.empty()) throw UnknownName("malformed catalog name '" + name + "'");
    return parts;
}

} // namespace

LieAlgebra heisenberg(std::size_t m) {
    const std::size_t n = 2 * m + 1;
    LieAlgebra algebra(n, "H" + std::to_string(m));
    for (std::size_t i = 0; i < m; ++i) algebra.set_structure(2 * i, 2 * i + 1, SparseVector::unit(n - 1));
    return algebra;
}

LieAlgebra abelian(std::size_t n) { return LieAlgebra(n, "A" + std::to_string(n)); }

CatalogEntry catalog_entry(const std::string& name, const std::map<std::string, Scalar>& parameters) {
    const auto parts = split_sum(name);
    CatalogEntry result = build_component(parts.front(), parameters);
    for (std::size_t k = 1; k < parts.size(); ++k) {
        CatalogEntry next = build_component(parts[k], parameters);
        result.name += "+" + next.name;
        result.abelian_summand = next.asserted.m == 0 ? result.abelian_summand + next.asserted.n : 0;
        result.asserted = {result.asserted.n + next.asserted.n, result.asserted.m + next.asserted.m,
                           std::max(result.asserted.c, next.asserted.c)};
        for (auto& [k2, v] : next.parameters) result.parameters[k2] = v;
        result.algebra = direct_sum(result.algebra, next.algebra);
    }
    result.algebra.set_name(result.name);
    if (parts.size() > 1) check_invariants(result.name, result.algebra, result.asserted);
    return result;
}

LieAlgebra catalog_get(const std::string& name, const std::map<std::string, Scalar>& parameters) {
    return catalog_entry(name, parameters).algebra;
}

std::vector<std::string> catalog_base_names() {
    std::vector<std::string> names;
    for (const auto& e : data_entries()) names.push_back(e.name);
    return names;
}

std::vector<Scalar> catalog_parameter_samples(const std::string& base) {
    const DataEntry* data = find_data_entry(base);
    if (data == nullptr || data->parameter_names.empty()) return {};
    return data->samples.at(data->parameter_names.front());
}

const std::string& catalog_json() {
    static const std::string text(detail::kCatalogJson);
    return text;
}

std::vector<CatalogEntry> enumerate(std::size_t max_dim, const EnumerateOptions& options) {
    if (max_dim > 8) throw InputError("enumerate supports max_dim <= 8");
    std::vector<CatalogEntry> out;
    for (std::size_t n = 1; n <= max_dim; ++n) out.push_back(catalog_entry("A" + std::to_string(n)));

    auto with_extensions = [&](const std::string& name, std::size_t dim) {
        if (dim > max_dim) return;
        for (std::size_t k = 0; dim + k <= max_dim; ++k)
            out.push_back(catalog_entry(k == 0 ? name : name + "+A" + std::to_string(k)));
    };
    for (std::size_t m = 1; 2 * m + 1 <= max_dim; ++m) with_extensions("H" + std::to_string(m), 2 * m + 1);
    for (const auto& data : data_entries()) {
        if (data.parameter_names.empty()) {
            with_extensions(data.name, data.dim);
            continue;
        }
        std::vector<Scalar> samples = options.epsilon_samples.empty() ? data.samples.at(data.parameter_names.front())
                                                                       : options.epsilon_samples;
        for (const auto& value : samples)
            with_extensions(data.name + "(" + to_string(value) + ")", data.dim);
    }
    return out;
}

} // namespace schurlab
