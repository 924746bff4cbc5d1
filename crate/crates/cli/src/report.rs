use std::io::Write;
use std::process::ExitCode;

use serde::Serialize;
use serde_json::{json, Value};

use leibniz_core::rational::format_rational;
use leibniz_core::Matrix;

/// Bad arguments, unreadable files or parse errors (exit code 2).
#[derive(Debug)]
pub struct UsageError(pub String);

pub struct Report {
    command: &'static str,
    inputs: Value,
    results: Value,
    failures: Vec<String>,
}

impl Report {
    pub fn new(command: &'static str, inputs: Value) -> Self {
        Report {
            command,
            inputs,
            results: json!({}),
            failures: Vec::new(),
        }
    }

    pub fn result(mut self, results: Value) -> Self {
        self.results = results;
        self
    }

    pub fn fail(&mut self, message: String) {
        self.failures.push(message);
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "failures": self.failures,
        })
    }

    pub fn emit(&self) -> ExitCode {
        let text = serde_json::to_string_pretty(&self.to_json()).expect("plain JSON values");
        let _ = writeln!(std::io::stdout(), "{text}");
        if self.failures.is_empty() {
            ExitCode::SUCCESS
        } else {
            ExitCode::from(1)
        }
    }
}

pub fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable report content")
}

/// Columns as lists of rational strings.
pub fn matrix_columns(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.cols()).map(|j| m.column(j).iter().map(format_rational).collect()).collect()
}
