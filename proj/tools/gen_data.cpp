// Regenerates the exceptional character tables from the groups themselves and
// reseals hand-maintained data files (Springer tables) after editing.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "wf/chars.hpp"

namespace {

int write_tables(const std::string& out) {
  for (auto t : {wf::CartanType{wf::Series::G, 2}, wf::CartanType{wf::Series::F, 4}, wf::CartanType{wf::Series::E, 6}}) {
    wf::WeylGroup W(wf::simply_connected(t));
    auto chars = wf::label_exceptional(W, wf::dixon_characters(*W.perm_group()));
    std::string defect = wf::orthogonality_defect(W, chars);
    if (!defect.empty()) {
      std::cerr << t.name() << ": " << defect << "\n";
      return 1;
    }
    std::string path = out + "/" + wf::table_file_name(t);
    std::ofstream(path) << wf::render_table_file(W, chars);
    std::cout << path << ": " << chars.size() << " characters\n";
  }
  return 0;
}

int reseal(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "cannot read " << path << "\n";
    return 2;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  auto k = text.rfind("checksum ");
  if (k != std::string::npos && (k == 0 || text[k - 1] == '\n')) text.resize(k);
  in.close();
  std::ofstream(path) << wf::seal(text);
  std::cout << path << ": sealed\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maintain the shipped data files"};
  std::string out = wf::data_dir();
  std::vector<std::string> seal_files;
  app.add_option("-o,--out", out, "data directory for generated character tables");
  app.add_option("--seal", seal_files, "recompute the checksum line of these files instead");
  CLI11_PARSE(app, argc, argv);
  if (!seal_files.empty()) {
    for (auto& f : seal_files)
      if (int rc = reseal(f)) return rc;
    return 0;
  }
  return write_tables(out);
}
