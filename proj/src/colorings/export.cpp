#include <regramsey/colorings.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace regramsey {

namespace {
    auto hex32(std::uint32_t v) -> std::string
    {
        std::ostringstream out;
        out << std::hex << std::setw(8) << std::setfill('0') << v;
        return out.str();
    }

    auto read_all(const std::filesystem::path & path) -> std::string
    {
        std::ifstream in{path, std::ios::binary};
        if (! in)
            throw std::runtime_error("cannot open " + path.string());
        std::stringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }

    auto write_all(const std::filesystem::path & path, const std::string & bytes) -> void
    {
        std::ofstream out{path, std::ios::binary};
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        if (! out)
            throw std::runtime_error("cannot write " + path.string());
    }
}

auto export_coloring(const Coloring & coloring, const std::string & stem, ExportEncoding encoding,
    const std::string & bound_descriptor) -> nlohmann::json
{
    auto d = coloring.domain();
    auto table = TableColoring::materialize(coloring);
    auto & packed = table->packed();

    std::string bytes;
    std::string extension;
    if (encoding == ExportEncoding::csv) {
        extension = ".csv";
        std::ostringstream out;
        std::size_t at = 0;
        for (Nat m = d.lo; m + 1 < d.hi; ++m) {
            out << m;
            for (Nat n = m + 1; n < d.hi; ++n)
                out << ',' << packed[at++];
            out << '\n';
        }
        bytes = out.str();
    }
    else {
        extension = ".bin";
        bytes.reserve(packed.size() * 4);
        for (auto c : packed)
            for (int shift = 0; shift < 32; shift += 8)
                bytes.push_back(static_cast<char>((c >> shift) & 0xff));
    }

    std::filesystem::path data_path = stem + extension;
    write_all(data_path, bytes);

    nlohmann::json header{
        {"format", "regramsey-coloring"},
        {"version", 1},
        {"construction", coloring.name()},
        {"domain", {d.lo, d.hi}},
        {"bound", bound_descriptor},
        {"parameters", coloring.parameters()},
        {"encoding", encoding == ExportEncoding::csv ? "csv" : "binary"},
        {"data", data_path.filename().string()},
        {"pairs", packed.size()},
        {"crc32", hex32(crc32(bytes.data(), bytes.size()))},
    };
    write_all(stem + ".json", header.dump(2) + "\n");
    return header;
}

auto import_coloring(const std::string & header_path) -> std::shared_ptr<TableColoring>
{
    auto header = nlohmann::json::parse(read_all(header_path));
    if (header.value("format", "") != "regramsey-coloring")
        throw std::invalid_argument(header_path + " is not a coloring header");

    Interval d{header.at("domain").at(0).get<Nat>(), header.at("domain").at(1).get<Nat>()};
    auto data_path = std::filesystem::path(header_path).parent_path() / header.at("data").get<std::string>();
    auto bytes = read_all(data_path);
    if (hex32(crc32(bytes.data(), bytes.size())) != header.at("crc32").get<std::string>())
        throw std::invalid_argument("checksum mismatch in " + data_path.string());

    std::vector<std::uint32_t> packed;
    packed.reserve(pair_count(d.size()));
    if (header.at("encoding") == "csv") {
        std::istringstream in{bytes};
        std::string line;
        Nat expected_m = d.lo;
        while (std::getline(in, line)) {
            std::istringstream row{line};
            std::string cell;
            std::getline(row, cell, ',');
            if (std::stoull(cell) != expected_m)
                throw std::invalid_argument("csv rows out of order at m = " + cell);
            Nat cells = 0;
            while (std::getline(row, cell, ',')) {
                packed.push_back(static_cast<std::uint32_t>(std::stoul(cell)));
                ++cells;
            }
            if (cells != d.hi - expected_m - 1)
                throw std::invalid_argument("csv row " + std::to_string(expected_m) + " has the wrong length");
            ++expected_m;
        }
    }
    else {
        if (bytes.size() % 4 != 0)
            throw std::invalid_argument("binary coloring size is not a multiple of 4");
        for (std::size_t i = 0; i < bytes.size(); i += 4) {
            std::uint32_t c = 0;
            for (int b = 3; b >= 0; --b)
                c = (c << 8) | static_cast<unsigned char>(bytes[i + b]);
            packed.push_back(c);
        }
    }
    return std::make_shared<TableColoring>(d, std::move(packed), header.at("construction").get<std::string>(),
        header.value("parameters", nlohmann::json::object()));
}

} // namespace regramsey
