use std::io::{Read, Write};
use std::net::{TcpListener, TcpStream};
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};
use std::thread::sleep;
use std::time::{Duration, Instant};

fn sg() -> Command {
    Command::new(env!("CARGO_BIN_EXE_sg"))
}

fn experiment(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../experiments")
        .join(name)
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn temp_script(name: &str, text: &str) -> PathBuf {
    let path = std::env::temp_dir().join(format!("sg-cli-{}-{name}.sgx", std::process::id()));
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn run_prints_the_transcript() {
    let out = sg()
        .arg("run")
        .arg(experiment("exp1.sgx"))
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("> beam random\nBeam of intensity 1.0\n> split z\n"));
    assert!(text.ends_with("> split z\nBeam of intensity 0.5\nBeam of intensity 0.0\n"));
}

#[test]
fn run_with_rounding_and_json() {
    let out = sg()
        .args(["run", "--round", "3"])
        .arg(experiment("exp3.sgx"))
        .output()
        .unwrap();
    assert!(stdout(&out).ends_with("Beam of intensity 0.125\nBeam of intensity 0.125\n"));
    let out = sg()
        .args(["run", "--json"])
        .arg(experiment("exp4.sgx"))
        .output()
        .unwrap();
    let text = stdout(&out);
    assert!(text.contains("\"name\": \"Experiment 4\""));
    assert!(text.contains("\"final\""));
}

#[test]
fn every_bundled_experiment_runs() {
    for entry in std::fs::read_dir(experiment("")).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().is_some_and(|e| e == "sgx") {
            let status = sg().arg("run").arg(&path).output().unwrap().status;
            let broken = path.file_stem().unwrap() == "broken";
            assert_eq!(
                status.code(),
                Some(if broken { 2 } else { 0 }),
                "{}",
                path.display()
            );
        }
    }
}

#[test]
fn exit_codes() {
    let parse_error = temp_script("parse", "beam random\nsplit q\n");
    let out = sg().arg("run").arg(&parse_error).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2, column 7"));

    let runtime_error = temp_script("runtime", "beam random\nflip\n");
    let out = sg().arg("run").arg(&runtime_error).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("need two beams"));

    let _ = std::fs::remove_file(parse_error);
    let _ = std::fs::remove_file(runtime_error);
}

#[test]
fn repl_reads_piped_input() {
    let mut child = sg()
        .arg("repl")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"beam random\nsplit z\nundo\nflip\nquit\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "Beam of intensity 1.0\n\
         Beam of intensity 0.5\nBeam of intensity 0.5\n\
         Beam of intensity 1.0\n\
         error: line 4, column 1: `flip`: need two beams to flip\n"
    );
}

fn get(port: u16, path: &str) -> Option<String> {
    let mut stream = TcpStream::connect(("127.0.0.1", port)).ok()?;
    write!(
        stream,
        "GET {path} HTTP/1.1\r\nHost: localhost\r\nConnection: close\r\n\r\n"
    )
    .ok()?;
    let mut response = String::new();
    stream.read_to_string(&mut response).ok()?;
    Some(response)
}

#[test]
fn serve_uses_sg_port() {
    let port = TcpListener::bind("127.0.0.1:0")
        .unwrap()
        .local_addr()
        .unwrap()
        .port();
    let mut child = sg()
        .arg("serve")
        .env("SG_PORT", port.to_string())
        .stderr(Stdio::null())
        .spawn()
        .unwrap();
    let deadline = Instant::now() + Duration::from_secs(20);
    let mut response = None;
    while Instant::now() < deadline {
        response = get(port, "/healthz");
        if response.is_some() {
            break;
        }
        sleep(Duration::from_millis(50));
    }
    child.kill().unwrap();
    child.wait().unwrap();
    let response = response.expect("server answered");
    assert!(response.starts_with("HTTP/1.1 200"));
    assert!(response.ends_with("ok"));
}
