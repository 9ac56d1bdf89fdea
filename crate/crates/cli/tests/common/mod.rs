#![allow(dead_code)]

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

pub const BIN: &str = env!("CARGO_BIN_EXE_applike");

pub fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

/// One `<name>.args` file with optional `.stdin`, `.stdout` and `.code`.
#[derive(Debug)]
pub struct Golden {
    pub name: String,
    pub args: Vec<String>,
    pub stdin: Option<Vec<u8>>,
    pub stdout: Vec<u8>,
    pub code: i32,
}

pub fn goldens() -> Vec<Golden> {
    let dir = fixtures();
    let mut names: Vec<String> = fs::read_dir(&dir)
        .expect("fixture directory")
        .filter_map(|e| {
            let name = e.ok()?.file_name().into_string().ok()?;
            name.strip_suffix(".args").map(String::from)
        })
        .collect();
    names.sort();
    names
        .into_iter()
        .map(|name| {
            let read = |ext: &str| fs::read(dir.join(format!("{name}.{ext}"))).ok();
            let args = String::from_utf8(read("args").unwrap()).unwrap();
            let code = read("code")
                .map(|c| String::from_utf8(c).unwrap().trim().parse().unwrap())
                .unwrap_or(0);
            Golden {
                args: args.split_whitespace().map(String::from).collect(),
                stdin: read("stdin"),
                stdout: read("stdout").unwrap_or_default(),
                code,
                name,
            }
        })
        .collect()
}

pub fn run(args: &[String], stdin: Option<&[u8]>) -> Output {
    let mut child = Command::new(BIN)
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn applike");
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or_default()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

/// `None` when the golden matches, otherwise what differed.
pub fn check(g: &Golden) -> Option<String> {
    let out = run(&g.args, g.stdin.as_deref());
    let code = out.status.code().unwrap_or(-1);
    if code != g.code {
        return Some(format!(
            "{}: exit {code}, want {} (stderr: {})",
            g.name,
            g.code,
            String::from_utf8_lossy(&out.stderr).trim_end()
        ));
    }
    if out.stdout != g.stdout {
        return Some(format!(
            "{}: stdout {:?}, want {:?}",
            g.name,
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&g.stdout)
        ));
    }
    if code != 0 && out.stderr.iter().filter(|&&b| b == b'\n').count() == 0 {
        return Some(format!("{}: no diagnostic on stderr", g.name));
    }
    None
}

/// `applike encode-bin --type T < json | applike decode-bin --type T`
pub fn shell_round_trip(ty: &str, json: &str) -> Result<String, String> {
    let script = format!("'{BIN}' encode-bin --type {ty} | '{BIN}' decode-bin --type {ty}");
    let mut child = Command::new("sh")
        .args(["-c", &script])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .map_err(|e| e.to_string())?;
    child
        .stdin
        .take()
        .unwrap()
        .write_all(format!("{json}\n").as_bytes())
        .map_err(|e| e.to_string())?;
    let out = child.wait_with_output().map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("pipeline exited with {}", out.status));
    }
    String::from_utf8(out.stdout).map_err(|e| e.to_string())
}

/// Records whose JSON the shell round trip is checked on.
pub fn round_trip_fixtures() -> Vec<(&'static str, String)> {
    let dir = fixtures();
    ["encode_bin_device", "encode_bin_benchmark", "show_device"]
        .into_iter()
        .map(|name| {
            let ty = if name.contains("benchmark") { "benchmark" } else { "device" };
            let json = fs::read_to_string(dir.join(format!("{name}.stdin"))).unwrap();
            (ty, json.trim_end().to_string())
        })
        .collect()
}
