#pragma once

#include <string>

namespace bfl {

// Hex SHA-256 of a file's bytes; identifies the exact input a report was
// produced from. Throws io_failure when the file cannot be read.
std::string sha256_file(const std::string& path);

std::string sha256_bytes(const std::string& bytes);

}  // namespace bfl
