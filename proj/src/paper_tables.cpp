#include "dpso/experiment.hpp"

#include <sstream>
#include <stdexcept>

namespace dpso {

namespace detail {
extern const char* const kPaperTablesCsv;
}

namespace {

std::vector<std::string> split_fields(const std::string& line)
{
    std::vector<std::string> fields;
    std::stringstream stream(line);
    std::string field;
    while (std::getline(stream, field, ',')) {
        fields.push_back(field);
    }
    return fields;
}

std::vector<PaperCell> parse_paper_tables()
{
    std::vector<PaperCell> cells;
    std::istringstream input(detail::kPaperTablesCsv);
    std::string line;
    bool header = true;
    while (std::getline(input, line)) {
        if (line.empty()) {
            continue;
        }
        if (header) {
            header = false;
            continue;
        }
        const auto f = split_fields(line);
        if (f.size() < 6) {
            throw std::logic_error("malformed embedded reference row: " + line);
        }
        cells.push_back({f[0], std::stoul(f[1]), std::stoul(f[2]), std::stoul(f[3]), f[4], std::stod(f[5])});
    }
    return cells;
}

} // namespace

const std::vector<PaperCell>& paper_cells()
{
    static const std::vector<PaperCell> cells = parse_paper_tables();
    return cells;
}

} // namespace dpso
