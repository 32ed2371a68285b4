//! JSON-lines persistence: one instance per line. An optional leading
//! header line of the form `{"config_digest":"..."}` is written by the CLI
//! and skipped on read.

use super::{CopInstance, InstanceError};
use std::io::{BufRead, BufReader, Read, Write};

pub fn write_instances_jsonl<W: Write>(
    mut w: W,
    instances: &[CopInstance],
    config_digest: Option<&str>,
) -> Result<(), InstanceError> {
    if let Some(d) = config_digest {
        writeln!(w, "{{\"config_digest\":\"{d}\"}}")?;
    }
    for inst in instances {
        let line = serde_json::to_string(inst)?;
        writeln!(w, "{line}")?;
    }
    Ok(())
}

pub fn read_instances_jsonl<R: Read>(r: R) -> Result<Vec<CopInstance>, InstanceError> {
    let reader = BufReader::new(r);
    let mut out = Vec::new();
    for line in reader.lines() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if trimmed.starts_with("{\"config_digest\"") {
            continue;
        }
        out.push(serde_json::from_str(trimmed)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::{generate_instance, ProblemKind};
    use super::*;

    #[test]
    fn round_trip_all_kinds() {
        let instances: Vec<_> = ProblemKind::ALL
            .iter()
            .map(|&k| generate_instance(k, 6, 11).unwrap())
            .collect();
        let mut buf = Vec::new();
        write_instances_jsonl(&mut buf, &instances, Some("abc123")).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("{\"config_digest\":\"abc123\"}\n"));
        assert!(text.contains("\"kind\":\"TSP\""));
        let back = read_instances_jsonl(&buf[..]).unwrap();
        assert_eq!(back, instances);
    }

    #[test]
    fn writes_are_byte_stable() {
        let instances = vec![generate_instance(ProblemKind::CVRP, 5, 3).unwrap()];
        let mut a = Vec::new();
        let mut b = Vec::new();
        write_instances_jsonl(&mut a, &instances, None).unwrap();
        write_instances_jsonl(&mut b, &instances, None).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn kind_irrelevant_fields_are_absent() {
        let inst = generate_instance(ProblemKind::KP, 4, 0).unwrap();
        let line = serde_json::to_string(&inst).unwrap();
        assert!(!line.contains("coords"));
        assert!(!line.contains("adjacency"));
        assert!(line.contains("weights"));
    }
}
