#ifndef SELBERG_DEFINITION_HPP
#define SELBERG_DEFINITION_HPP

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>

#include "selberg/coefficients.hpp"
#include "selberg/invariants.hpp"

namespace selberg {

// L-function definition file: INI-style, two sections.
//
//   [gamma]
//   q_scale = <double>            # Q in the functional equation
//   factor  = <lambda> <mu_re> <mu_im>   # repeatable, one per gamma factor
//   omega   = <re> <im>           # root number
//
//   [coefficients]
//   kind = dirichlet_product | dedekind_quadratic | explicit_list
//   # dirichlet_product:  modulus1/index1, modulus2/index2 (modulus 1 = zeta)
//   # dedekind_quadratic: discriminant
//   # explicit_list:      repeated "a = <re> <im>" rows for n = 1, 2, ...
//   n = <default table length>    # optional for generated kinds
//
// '#' starts a comment; blank lines ignored.
enum class CoefficientKind { dirichlet_product, dedekind_quadratic, explicit_list };

struct LFunctionDefinition {
    std::string name;  // stem of the file it was loaded from
    GammaFactorSpec gamma;
    CoefficientKind kind = CoefficientKind::explicit_list;
    std::int64_t modulus1 = 1, modulus2 = 1;
    int index1 = 1, index2 = 1;  // 1-based among the real primitive characters
    std::int64_t discriminant = 0;
    std::size_t default_length = 0;
    std::vector<cplx> explicit_values;  // 1-based semantics, values[0] = a(1)
};

namespace detail {

inline std::string trim(const std::string& text) {
    std::size_t lo = text.find_first_not_of(" \t\r");
    std::size_t hi = text.find_last_not_of(" \t\r");
    return lo == std::string::npos ? std::string() : text.substr(lo, hi - lo + 1);
}

inline std::vector<double> parse_numbers(const std::string& text, std::size_t expected,
                                         const std::string& key) {
    std::istringstream stream(text);
    std::vector<double> numbers;
    double value;
    while (stream >> value) numbers.push_back(value);
    std::string leftover;
    if (stream.clear(), stream >> leftover; !leftover.empty())
        throw std::invalid_argument("definition: non-numeric token in '" + key + "'");
    if (numbers.size() != expected)
        throw std::invalid_argument("definition: '" + key + "' expects " +
                                    std::to_string(expected) + " numbers");
    return numbers;
}

}  // namespace detail

inline LFunctionDefinition parse_definition(std::istream& input, const std::string& name) {
    LFunctionDefinition def;
    def.name = name;
    std::string section, line;
    bool saw_q = false, saw_omega = false, saw_kind = false;
    int line_no = 0;
    while (std::getline(input, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = detail::trim(line);
        if (line.empty()) continue;
        auto fail = [&](const std::string& what) {
            throw std::invalid_argument("definition " + name + " line " + std::to_string(line_no) +
                                        ": " + what);
        };
        if (line.front() == '[') {
            if (line.back() != ']') fail("unterminated section header");
            section = line.substr(1, line.size() - 2);
            if (section != "gamma" && section != "coefficients")
                fail("unknown section '" + section + "'");
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) fail("expected 'key = value'");
        std::string key = detail::trim(line.substr(0, eq));
        std::string value = detail::trim(line.substr(eq + 1));
        if (section == "gamma") {
            if (key == "q_scale") {
                def.gamma.q_scale = detail::parse_numbers(value, 1, key)[0];
                saw_q = true;
            } else if (key == "factor") {
                auto v = detail::parse_numbers(value, 3, key);
                def.gamma.factors.emplace_back(v[0], cplx(v[1], v[2]));
            } else if (key == "omega") {
                auto v = detail::parse_numbers(value, 2, key);
                def.gamma.omega = cplx(v[0], v[1]);
                saw_omega = true;
            } else {
                fail("unknown gamma key '" + key + "'");
            }
        } else if (section == "coefficients") {
            if (key == "kind") {
                if (value == "dirichlet_product")
                    def.kind = CoefficientKind::dirichlet_product;
                else if (value == "dedekind_quadratic")
                    def.kind = CoefficientKind::dedekind_quadratic;
                else if (value == "explicit_list")
                    def.kind = CoefficientKind::explicit_list;
                else
                    fail("unknown coefficient kind '" + value + "'");
                saw_kind = true;
            } else if (key == "modulus1" || key == "modulus2" || key == "index1" ||
                       key == "index2" || key == "discriminant" || key == "n") {
                double v = detail::parse_numbers(value, 1, key)[0];
                if (v != std::floor(v)) fail("'" + key + "' must be an integer");
                auto iv = static_cast<std::int64_t>(v);
                if (key == "modulus1") def.modulus1 = iv;
                else if (key == "modulus2") def.modulus2 = iv;
                else if (key == "index1") def.index1 = static_cast<int>(iv);
                else if (key == "index2") def.index2 = static_cast<int>(iv);
                else if (key == "discriminant") def.discriminant = iv;
                else def.default_length = static_cast<std::size_t>(iv);
            } else if (key == "a") {
                auto v = detail::parse_numbers(value, 2, key);
                def.explicit_values.emplace_back(v[0], v[1]);
            } else {
                fail("unknown coefficients key '" + key + "'");
            }
        } else {
            fail("key outside any section");
        }
    }
    if (!saw_q || def.gamma.factors.empty())
        throw std::invalid_argument("definition " + name + ": [gamma] needs q_scale and factors");
    if (!saw_omega)
        throw std::invalid_argument("definition " + name + ": [gamma] needs omega");
    if (!saw_kind)
        throw std::invalid_argument("definition " + name + ": [coefficients] needs kind");
    if (def.kind == CoefficientKind::explicit_list && def.explicit_values.empty())
        throw std::invalid_argument("definition " + name + ": explicit_list without 'a' rows");
    def.gamma.validate();
    return def;
}

inline LFunctionDefinition load_definition(const std::string& path) {
    std::ifstream input(path);
    if (!input) throw std::invalid_argument("definition file not readable: " + path);
    std::string name = path;
    if (auto slash = name.find_last_of('/'); slash != std::string::npos) name.erase(0, slash + 1);
    if (auto dot = name.find_last_of('.'); dot != std::string::npos) name.erase(dot);
    return parse_definition(input, name);
}

// Materialize the coefficient table; n_max = 0 takes the file default.
inline CoefficientSeries build_coefficients(const LFunctionDefinition& def, std::size_t n_max = 0) {
    if (n_max == 0) n_max = def.default_length;
    switch (def.kind) {
        case CoefficientKind::dirichlet_product:
            if (n_max == 0) throw std::invalid_argument("definition: no table length given");
            return coefficients_dirichlet_product(def.modulus1, def.index1, def.modulus2,
                                                  def.index2, n_max);
        case CoefficientKind::dedekind_quadratic:
            if (n_max == 0) throw std::invalid_argument("definition: no table length given");
            return coefficients_dedekind_quadratic(def.discriminant, n_max);
        case CoefficientKind::explicit_list: {
            if (n_max == 0 || n_max > def.explicit_values.size())
                n_max = def.explicit_values.size();
            std::vector<cplx> values(n_max + 1);
            values[0] = 0.0;
            for (std::size_t n = 1; n <= n_max; ++n) values[n] = def.explicit_values[n - 1];
            return CoefficientSeries(std::move(values), false);
        }
    }
    throw std::invalid_argument("definition: unreachable coefficient kind");
}

}  // namespace selberg

#endif
