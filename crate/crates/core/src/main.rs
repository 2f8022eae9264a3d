use std::io;

fn main() {
    let mut out = io::stdout().lock();
    let mut err = io::stderr().lock();
    let code = treewire::cli::run(std::env::args_os(), &mut out, &mut err);
    drop(out);
    std::process::exit(code);
}
