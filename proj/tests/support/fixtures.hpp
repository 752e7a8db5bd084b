#pragma once

#include "frieze/frieze.hpp"

#include <fstream>
#include <sstream>
#include <string>

namespace frieze::testing {

inline std::string data_path(const std::string& name) { return std::string(FRIEZE_DATA_DIR) + "/" + name; }

inline std::string read_data(const std::string& name)
{
    std::ifstream in(data_path(name));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline const FieldDescriptor& q5()
{
    static const FieldDescriptor f = FieldDescriptor::quadratic(5);
    return f;
}

inline FieldElement e5(const char* text) { return parse_element(text, q5()); }

/// Seeds x = (1,-2,6,2,1), y = (2,1,-1,sqrt 5) of the 6x6 running example.
inline SeedData exm_seeds()
{
    SeedData s;
    for (int v : {1, -2, 6, 2, 1})
        s.x.emplace_back(v);
    for (const char* v : {"2", "1", "-1", "sqrt(5)"})
        s.y.push_back(e5(v));
    return s;
}

inline SquareMatrix load_matrix(const std::string& name) { return io::read_matrix(read_data(name)); }

}  // namespace frieze::testing
