// The command-line front end driven in-process.

use std::fs;

fn main() {
    let dir = std::env::temp_dir().join(format!("bintutte-tour-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let k3 = dir.join("k3.txt");
    fs::write(&k3, "3 3\n1 1 0\n0 1 1\n1 0 1\n").unwrap();
    let k3 = k3.to_string_lossy().into_owned();

    for args in [
        vec!["eval", "tutte", &k3, "--q", "2", "--gamma", "1"],
        vec!["eval", "spectrum", &k3],
        vec!["verify", "duality", &k3, "--q", "3", "--gamma", "1/2"],
        vec!["gadget", "synth", "--target", "2/3", "--gamma-avail", "2", "--tolerance", "1/100"],
    ] {
        let mut argv = vec!["bintutte"];
        argv.extend(args.iter().copied());
        let mut out = Vec::new();
        let code = bintutte::cli::run(&argv, &mut out, &mut std::io::stderr());
        print!("$ {}\n{}", argv[1..].join(" "), String::from_utf8_lossy(&out));
        println!("exit {code}");
    }
    fs::remove_dir_all(&dir).ok();
}
