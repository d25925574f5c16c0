#include "swcol/io_util.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <unistd.h>

namespace swcol {

void atomic_write_file(const std::filesystem::path& path, std::string_view contents) {
    const auto parent = path.parent_path();
    if (!parent.empty())
        std::filesystem::create_directories(parent);
    std::filesystem::path tmp = path;
    tmp += ".tmp." + std::to_string(::getpid());

    try {
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (!out)
                throw std::runtime_error("io: cannot create " + tmp.string());
            out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
            out.flush();
            if (!out)
                throw std::runtime_error("io: short write to " + tmp.string());
        }
        std::filesystem::rename(tmp, path);
    } catch (...) {
        std::error_code ec;
        std::filesystem::remove(tmp, ec);
        throw;
    }
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("io: cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace swcol
