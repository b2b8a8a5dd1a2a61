#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "relalg/catalog.hpp"
#include "relalg/model_io.hpp"

using namespace relalg;

TEST_CASE("model files round-trip byte for byte") {
    for (const auto& entry : list_models()) {
        const FiniteAlgebra a = build(entry.id);
        const std::string text = write_model_json(a);
        const FiniteAlgebra back = read_model_json(text);
        CHECK(back == a);
        CHECK(back.names() == a.names());
        CHECK(write_model_json(back) == text);
    }
}

TEST_CASE("model file layout") {
    const std::string text = write_model_json(build("m3"));
    CHECK(text.find("\"size\": 4") < text.find("\"names\""));
    CHECK(text.find("\"names\"") < text.find("\"add\""));
    CHECK(text.find("\"add\"") < text.find("\"neg\""));
    CHECK(text.find("\"neg\"") < text.find("\"comp\""));
    CHECK(text.find("\"comp\"") < text.find("\"conv\""));
    CHECK(text.find("\"conv\"") < text.find("\"ident\": 1"));
    CHECK(text.find("[0, 2, 3, 3]") != std::string::npos);
    CHECK(text.back() == '\n');

    AlgebraTables t = build("m3").tables();
    t.names.clear();
    CHECK(write_model_json(FiniteAlgebra(t)).find("names") == std::string::npos);
}

TEST_CASE("malformed model files are rejected") {
    CHECK_THROWS_AS(read_model_json("not json"), ModelFormatError);
    CHECK_THROWS_AS(read_model_json("{\"size\": 1}"), ModelFormatError);
    CHECK_THROWS_AS(
        read_model_json(R"({"size": 1, "add": [[0]], "neg": [0], "comp": [[0]], "conv": [0], "ident": 3})"),
        ModelFormatError);
    CHECK_THROWS_AS(
        read_model_json(R"({"size": 2, "add": [[0]], "neg": [0, 1], "comp": [[0, 0], [0, 0]], "conv": [0, 1], "ident": 0})"),
        ModelFormatError);
    CHECK_THROWS_AS(
        read_model_json(R"({"size": 1, "add": [[-1]], "neg": [0], "comp": [[0]], "conv": [0], "ident": 0})"),
        ModelFormatError);
    CHECK_NOTHROW(read_model_json(R"({"size": 1, "add": [[0]], "neg": [0], "comp": [[0]], "conv": [0], "ident": 0})"));
}

TEST_CASE("model files on disk") {
    const auto path = std::filesystem::temp_directory_path() / "relalg_test_model.json";
    save_model_file(build("b9"), path);
    CHECK(load_model_file(path) == build("b9"));
    std::filesystem::remove(path);
    CHECK_THROWS_AS(load_model_file(path), ModelFormatError);
}

TEST_CASE("ascii rendering") {
    const std::string m3 = render_model(build("m3"), RenderFormat::ascii_table);
    CHECK(m3.find("0' : 0 0' 1 1") != std::string::npos);
    CHECK(m3.find("size: 4") == 0);

    const std::string a2 = render_ascii(build("a2"));
    // Addition rows of the non-associative table.
    CHECK(a2.find("1' : 1' 1' 0") != std::string::npos);
    CHECK(a2.find("1  : 1 0 1") != std::string::npos);

    CHECK(render_model(build("d"), RenderFormat::structured) == write_model_json(build("d")));
}
