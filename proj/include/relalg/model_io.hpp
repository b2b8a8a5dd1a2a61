#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "relalg/algebra.hpp"

namespace relalg {

class ModelFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// JSON document with fields in the order size, names, add, neg, comp, conv,
/// ident.  `names` is omitted for unnamed algebras.  The output is a fixed
/// function of the tables, so write(read(write(a))) == write(a).
std::string write_model_json(const FiniteAlgebra& a);

FiniteAlgebra read_model_json(std::string_view text);

FiniteAlgebra load_model_file(const std::filesystem::path& path);
void save_model_file(const FiniteAlgebra& a, const std::filesystem::path& path);

/// One block per operation, rows as "<name> : v1 v2 ...".
std::string render_ascii(const FiniteAlgebra& a);

enum class RenderFormat { ascii_table, structured };

std::string render_model(const FiniteAlgebra& a, RenderFormat format);

}  // namespace relalg
