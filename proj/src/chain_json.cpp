#include "cicy/serialize.hpp"

#include "cicy/error.hpp"

#include <limits>
#include <sstream>

namespace cicy {

namespace {

const Json& require(const Json& object, const char* field)
{
    if (!object.is_object() || !object.contains(field))
        throw InvalidArgument(std::string("chain document: missing field '") + field + "'");
    return object.at(field);
}

std::size_t one_based(const Json& value, const char* field)
{
    if (!value.is_number_integer() || value.get<long long>() < 1)
        throw InvalidArgument(std::string("chain document: '") + field + "' must be a positive integer");
    return static_cast<std::size_t>(value.get<long long>() - 1);
}

CanonicalKey key_from_hex(const std::string& hex)
{
    if (hex.size() % 2 != 0)
        throw InvalidArgument("chain document: key has odd length");
    std::string bytes;
    for (std::size_t i = 0; i < hex.size(); i += 2) {
        unsigned value = 0;
        for (std::size_t k = i; k < i + 2; ++k) {
            char c = hex[k];
            value <<= 4;
            if (c >= '0' && c <= '9')
                value |= static_cast<unsigned>(c - '0');
            else if (c >= 'a' && c <= 'f')
                value |= static_cast<unsigned>(c - 'a' + 10);
            else
                throw InvalidArgument("chain document: key is not lowercase hex");
        }
        bytes.push_back(static_cast<char>(value));
    }
    return CanonicalKey(std::move(bytes));
}

} // namespace

Json integer_to_json(const Integer& value)
{
    if (value >= std::numeric_limits<long long>::min() && value <= std::numeric_limits<long long>::max())
        return value.convert_to<long long>();
    return value.str();
}

Integer integer_from_json(const Json& value)
{
    if (value.is_number_integer())
        return Integer(value.get<long long>());
    if (value.is_string()) {
        const auto& text = value.get_ref<const std::string&>();
        std::size_t start = !text.empty() && text[0] == '-' ? 1 : 0;
        if (text.size() == start || text.find_first_not_of("0123456789", start) != std::string::npos)
            throw InvalidArgument("not an integer: \"" + text + "\"");
        return Integer(text);
    }
    throw InvalidArgument("expected an integer, got " + value.dump());
}

Json matrix_to_json(const ConfigurationMatrix& cfg)
{
    Json lines = Json::array();
    std::istringstream in(cfg.render());
    for (std::string line; std::getline(in, line);)
        lines.push_back(line);
    return lines;
}

ConfigurationMatrix matrix_from_json(const Json& lines)
{
    if (!lines.is_array())
        throw InvalidArgument("matrix must be an array of text rows");
    std::string text;
    for (const auto& line : lines) {
        if (!line.is_string())
            throw InvalidArgument("matrix rows must be strings");
        text += line.get<std::string>();
        text += '\n';
    }
    return parse_configuration(text);
}

Json transition_report_to_json(const TransitionReport& report)
{
    return {
        {"odp_count", integer_to_json(report.odp_count)},
        {"euler_before", integer_to_json(report.euler_resolved)},
        {"euler_after", integer_to_json(report.euler_smoothed)},
        {"conifold_certified", report.conifold_certified},
        {"ineffective", report.ineffective},
    };
}

TransitionReport transition_report_from_json(const Json& value)
{
    TransitionReport report;
    report.odp_count = integer_from_json(require(value, "odp_count"));
    report.euler_resolved = integer_from_json(require(value, "euler_before"));
    report.euler_smoothed = integer_from_json(require(value, "euler_after"));
    report.ineffective = require(value, "ineffective").get<bool>();
    report.conifold_certified = value.value("conifold_certified",
                                            report.euler_resolved - report.euler_smoothed ==
                                                2 * report.odp_count);
    return report;
}

Json chain_to_json(const TransitionChain& chain)
{
    Json steps = Json::array();
    for (const auto& step : chain.steps) {
        Json s;
        if (step.kind == ChainStep::Kind::Split) {
            s["kind"] = "split";
            s["column"] = step.column + 1;
            s["n"] = step.n;
            Json parts = Json::array();
            for (const auto& p : step.parts)
                parts.push_back(p.values());
            s["parts"] = parts;
        } else {
            s["kind"] = "contract";
            s["row"] = step.row + 1;
            Json ones = Json::array();
            for (auto c : step.one_columns)
                ones.push_back(c + 1);
            s["one_columns"] = ones;
        }
        s["before_key"] = step.before.hex();
        s["after_key"] = step.after.hex();
        if (step.result)
            s["matrix"] = matrix_to_json(*step.result);
        if (step.report)
            s.update(transition_report_to_json(*step.report));
        steps.push_back(std::move(s));
    }
    return {{"start", matrix_to_json(chain.start)}, {"end", matrix_to_json(chain.end)}, {"steps", steps}};
}

TransitionChain chain_from_json(const Json& document)
{
    try {
        TransitionChain chain{matrix_from_json(require(document, "start")), {},
                              matrix_from_json(require(document, "end"))};
        const Json& steps = require(document, "steps");
        if (!steps.is_array())
            throw InvalidArgument("chain document: 'steps' must be an array");

        std::optional<ConfigurationMatrix> previous = chain.start;
        for (const auto& s : steps) {
            ChainStep step;
            const std::string kind = require(s, "kind").get<std::string>();
            if (kind == "split") {
                step.kind = ChainStep::Kind::Split;
                step.column = one_based(require(s, "column"), "column");
                step.n = require(s, "n").get<int>();
                for (const auto& p : require(s, "parts"))
                    step.parts.emplace_back(p.get<std::vector<int>>());
            } else if (kind == "contract") {
                step.kind = ChainStep::Kind::Contract;
                step.row = one_based(require(s, "row"), "row");
                for (const auto& c : require(s, "one_columns"))
                    step.one_columns.push_back(one_based(c, "one_columns"));
                if (s.contains("odp_count"))
                    step.report = transition_report_from_json(s);
            } else {
                throw InvalidArgument("chain document: unknown step kind '" + kind + "'");
            }
            if (s.contains("matrix"))
                step.result = matrix_from_json(s.at("matrix"));

            if (s.contains("before_key"))
                step.before = key_from_hex(s.at("before_key").get<std::string>());
            else if (previous)
                step.before = canonical_key(*previous);
            else
                throw InvalidArgument("chain document: step needs 'before_key' or a preceding matrix");

            if (s.contains("after_key"))
                step.after = key_from_hex(s.at("after_key").get<std::string>());
            else if (step.result)
                step.after = canonical_key(*step.result);
            else
                throw InvalidArgument("chain document: step needs 'after_key' or 'matrix'");

            previous = step.result;
            chain.steps.push_back(std::move(step));
        }
        return chain;
    } catch (const Json::exception& e) {
        throw InvalidArgument(std::string("chain document: ") + e.what());
    }
}

std::string dump_chain(const TransitionChain& chain)
{
    return chain_to_json(chain).dump(2) + "\n";
}

TransitionChain load_chain(std::string_view text)
{
    Json document;
    try {
        document = Json::parse(text);
    } catch (const Json::parse_error& e) {
        std::size_t line = 1, column = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError(line, column, std::string("chain JSON: ") + e.what());
    }
    return chain_from_json(document);
}

} // namespace cicy
