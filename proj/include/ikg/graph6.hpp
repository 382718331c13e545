#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ikg/graph.hpp"

namespace ikg {

/// Malformed graph6 input. offset() is the zero-based byte position of the problem.
class Graph6Error : public std::runtime_error {
public:
    Graph6Error(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset)
    {
    }
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// graph6 line without the trailing newline.
std::string graph6_encode(const SimpleGraph& g);

/// Accepts an optional ">>graph6<<" header and a trailing "\n" or "\r\n".
SimpleGraph graph6_decode(std::string_view line);

/// One graph per line; blank lines are skipped.
std::vector<SimpleGraph> read_graph6(std::istream& in);
void write_graph6(std::ostream& out, const std::vector<SimpleGraph>& graphs);

}  // namespace ikg
