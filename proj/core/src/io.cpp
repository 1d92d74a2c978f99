#include "pbord/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace pbord {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

bool valid_id(const std::string& id) {
    if (id.empty()) return false;
    return std::all_of(id.begin(), id.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '_' || c == '-' || c == '.';
    });
}

Money parse_money(const std::string& token, std::size_t line, const char* what) {
    Money value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec == std::errc::result_out_of_range)
        throw ParseError(line, std::string(what) + " out of range: '" + token + "'");
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw ParseError(line, std::string("malformed ") + what + ": '" + token + "'");
    return value;
}

std::vector<std::string> split_class(const std::string& chunk, std::size_t line) {
    std::string body = trim(chunk);
    if (body.empty()) throw ParseError(line, "empty preference class");
    bool braced = body.front() == '{';
    if (braced != (body.back() == '}'))
        throw ParseError(line, "unbalanced braces in ranking");
    if (braced) body = trim(std::string_view(body).substr(1, body.size() - 2));
    std::vector<std::string> ids;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = body.find(',', start);
        std::string id = trim(std::string_view(body).substr(
            start, comma == std::string::npos ? std::string::npos : comma - start));
        if (id.empty()) throw ParseError(line, "empty project id in ranking");
        if (id.find('{') != std::string::npos || id.find('}') != std::string::npos)
            throw ParseError(line, "unbalanced braces in ranking");
        ids.push_back(std::move(id));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (!braced && ids.size() > 1)
        throw ParseError(line, "tied projects must be braced: '" + trim(chunk) + "'");
    return ids;
}

} // namespace

Instance parse_instance(std::istream& in) {
    enum class Section { Header, Budget, Projects, Agents };
    Section section = Section::Header;

    std::vector<Project> projects;
    Money budget = 0;
    std::vector<WeakRanking> rankings;
    std::map<std::string, std::uint32_t> index_of;

    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::string line = trim(raw);
        if (line.empty()) continue;

        std::istringstream words(line);
        std::string directive;
        words >> directive;

        if (directive == "pbinstance") {
            if (section != Section::Header)
                throw ParseError(line_no, "duplicate pbinstance header");
            std::string version, extra;
            words >> version;
            if (version.empty()) throw ParseError(line_no, "missing format version");
            if (words >> extra) throw ParseError(line_no, "trailing text after version");
            if (version != "1")
                throw ParseError(line_no, "unsupported format version '" + version + "'");
            section = Section::Budget;
        } else if (directive == "budget") {
            if (section == Section::Header)
                throw ParseError(line_no, "expected 'pbinstance 1' header first");
            if (section != Section::Budget)
                throw ParseError(line_no, "duplicate budget directive");
            std::string token, extra;
            words >> token;
            if (token.empty()) throw ParseError(line_no, "missing budget amount");
            if (words >> extra) throw ParseError(line_no, "trailing text after budget");
            budget = parse_money(token, line_no, "budget");
            if (budget < 0) throw ParseError(line_no, "budget must be non-negative");
            section = Section::Projects;
        } else if (directive == "project") {
            if (section == Section::Header)
                throw ParseError(line_no, "expected 'pbinstance 1' header first");
            if (section == Section::Budget)
                throw ParseError(line_no, "expected budget before projects");
            if (section == Section::Agents)
                throw ParseError(line_no, "project lines must precede agent lines");
            std::string id, token, extra;
            words >> id >> token;
            if (id.empty() || token.empty())
                throw ParseError(line_no, "expected 'project <id> <cost>'");
            if (words >> extra) throw ParseError(line_no, "trailing text after cost");
            if (!valid_id(id)) throw ParseError(line_no, "invalid project id '" + id + "'");
            if (index_of.count(id)) throw ParseError(line_no, "duplicate project '" + id + "'");
            Money cost = parse_money(token, line_no, "cost");
            if (cost <= 0) throw ParseError(line_no, "cost must be positive");
            index_of.emplace(id, 0);
            projects.push_back(Project{id, cost});
        } else if (directive == "agent") {
            if (section == Section::Header)
                throw ParseError(line_no, "expected 'pbinstance 1' header first");
            if (section == Section::Budget)
                throw ParseError(line_no, "expected budget before agents");
            if (section == Section::Projects) {
                if (projects.empty()) throw ParseError(line_no, "no projects declared");
                std::sort(projects.begin(), projects.end(),
                          [](const Project& a, const Project& b) { return a.id < b.id; });
                for (std::uint32_t i = 0; i < projects.size(); ++i)
                    index_of[projects[i].id] = i;
                section = Section::Agents;
            }
            std::string rest = trim(std::string_view(line).substr(directive.size()));
            if (rest.empty()) throw ParseError(line_no, "empty ranking");
            WeakRanking ranking;
            std::vector<bool> seen(projects.size(), false);
            std::size_t start = 0;
            while (start <= rest.size()) {
                std::size_t sep = rest.find('>', start);
                std::string chunk =
                    rest.substr(start, sep == std::string::npos ? std::string::npos : sep - start);
                std::vector<std::uint32_t> cls;
                for (const std::string& id : split_class(chunk, line_no)) {
                    auto it = index_of.find(id);
                    if (it == index_of.end())
                        throw ParseError(line_no, "unknown project '" + id + "'");
                    if (seen[it->second])
                        throw ParseError(line_no, "project '" + id + "' ranked twice");
                    seen[it->second] = true;
                    cls.push_back(it->second);
                }
                std::sort(cls.begin(), cls.end());
                ranking.classes.push_back(std::move(cls));
                if (sep == std::string::npos) break;
                start = sep + 1;
            }
            for (std::uint32_t p = 0; p < projects.size(); ++p)
                if (!seen[p])
                    throw ParseError(line_no,
                                     "ranking does not mention project '" + projects[p].id + "'");
            rankings.push_back(std::move(ranking));
        } else {
            throw ParseError(line_no, "unknown directive '" + directive + "'");
        }
    }

    if (section == Section::Header) throw ParseError(line_no + 1, "missing 'pbinstance 1' header");
    if (section == Section::Budget) throw ParseError(line_no + 1, "missing budget directive");
    if (projects.empty()) throw ParseError(line_no + 1, "no projects declared");
    if (rankings.empty()) throw ParseError(line_no + 1, "no agents declared");
    return Instance(std::move(projects), budget, std::move(rankings));
}

Instance parse_instance(const std::string& text) {
    std::istringstream in(text);
    return parse_instance(in);
}

Instance load_instance(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open '" + path.string() + "'");
    return parse_instance(in);
}

std::string serialize_instance(const Instance& instance) {
    std::ostringstream out;
    out << "pbinstance 1\n";
    out << "budget " << instance.budget() << "\n";
    for (const Project& p : instance.projects()) out << "project " << p.id << " " << p.cost << "\n";
    for (const WeakRanking& ranking : instance.rankings()) {
        out << "agent";
        for (std::size_t depth = 0; depth < ranking.classes.size(); ++depth) {
            std::vector<std::uint32_t> cls = ranking.classes[depth];
            std::sort(cls.begin(), cls.end());
            out << (depth == 0 ? " " : " > ");
            if (cls.size() > 1) out << "{";
            for (std::size_t k = 0; k < cls.size(); ++k) {
                if (k > 0) out << ",";
                out << instance.id(cls[k]);
            }
            if (cls.size() > 1) out << "}";
        }
        out << "\n";
    }
    return out.str();
}

void save_instance(const Instance& instance, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot open '" + path.string() + "' for writing");
    out << serialize_instance(instance);
}

} // namespace pbord
