#pragma once
// Checksummed plain-text data assets. The last line of a file is
// "checksum <fnv1a-64 hex of everything before it>".

#include <string>

namespace wf {

std::string fnv1a_hex(const std::string& s);
// body + checksum line
std::string seal(const std::string& body);
// body with the checksum verified; throws InputError
std::string unseal(const std::string& text, const std::string& what);
// Data directory: $WF_DATA_DIR if set, else the source tree's data/.
std::string data_dir();
// contents of data_dir()/relative; throws InputError if missing
std::string read_data_file(const std::string& relative);

}  // namespace wf
