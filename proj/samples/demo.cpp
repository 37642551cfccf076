// Loads every .grp file in a directory and prints its structural invariants.

#include <filesystem>
#include <iostream>

#include <grpkit/grpkit.hpp>

int main(int argc, char** argv) {
  namespace fs = std::filesystem;
  fs::path dir = argc > 1 ? argv[1] : "samples";
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".grp") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    std::cerr << "no .grp files in " << dir << "\n";
    return 1;
  }
  try {
    for (const auto& f : files) {
      grpkit::PermGroup g = grpkit::read_grp_file(f.string());
      std::cout << f.filename().string() << ": |G|=" << g.order()
                << " soluble=" << grpkit::is_soluble(g)
                << " supersoluble=" << grpkit::is_supersoluble(g)
                << " |F|=" << grpkit::fitting(g).order()
                << " |F*|=" << grpkit::generalized_fitting_star(g).order()
                << " |F~|=" << grpkit::shemetkov_tilde_fitting(g).order()
                << " |Phi|=" << grpkit::frattini(g).order()
                << " maximals=" << grpkit::maximal_subgroups(g).maximals.size()
                << " huppert=" << grpkit::huppert(g).holds << "\n";
    }
  } catch (const grpkit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
