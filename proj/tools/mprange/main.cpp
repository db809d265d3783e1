#include "commands.hpp"
#include "output.hpp"

#include "mpr/parallel.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"mprange: walk transforms, phi^4 coefficients and edge asymptotics"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json", out_dir;
  int threads = 1;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", out_dir, "Write <command>.<format> into this directory instead of stdout");
  app.add_option("--threads", threads, "Worker threads")->check(CLI::Range(1, 256));

  mprange::Selected selected;
  mprange::register_commands(app, selected);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return 2;
  }

  mpr::set_worker_count(threads);
  const auto fmt = format == "csv" ? mprange::Format::csv : mprange::Format::json;
  try {
    const mprange::Result result = selected.run();
    const std::string text = mprange::render(result, fmt);
    if (out_dir.empty()) {
      std::cout << text;
    } else {
      std::filesystem::create_directories(out_dir);
      const auto path = std::filesystem::path(out_dir) / (selected.name + "." + format);
      std::ofstream f(path, std::ios::binary);
      if (!(f << text)) {
        std::cerr << "error: cannot write " << path.string() << "\n";
        return 1;
      }
    }
    return result.status;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
