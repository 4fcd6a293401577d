//! Text formats for forbidden assignments (`.fav`) and flow families.
//!
//! Both use lines `<edgeId> <residues>` with 1-based edge ids and
//! comma-joined residues; the group is supplied out of band. Flow files
//! separate family members with `flow <index>` lines. Lines starting with
//! `c ` and blank lines are ignored.

use std::fmt::Write;

use super::{ForbiddenAssignment, GroupFlow};
use crate::error::{Error, Result};
use crate::group::{GroupElement, GroupSpec};

fn parse_err<T>(line: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse { line, message: message.into() })
}

fn is_skipped(line: &str) -> bool {
    line.is_empty() || line == "c" || line.starts_with("c ")
}

/// Collects `<edgeId> <residues>` lines into a total map over `m` edges.
struct AssignmentBuilder<'a> {
    spec: &'a GroupSpec,
    values: Vec<Option<GroupElement>>,
    start_line: usize,
}

impl<'a> AssignmentBuilder<'a> {
    fn new(spec: &'a GroupSpec, m: usize, start_line: usize) -> Self {
        AssignmentBuilder { spec, values: vec![None; m], start_line }
    }

    fn push(&mut self, line_no: usize, line: &str) -> Result<()> {
        let mut parts = line.split_whitespace();
        let (Some(id), Some(value), None) = (parts.next(), parts.next(), parts.next()) else {
            return parse_err(line_no, "expected `<edgeId> <residues>`");
        };
        let m = self.values.len();
        let e = match id.parse::<usize>() {
            Ok(e) if (1..=m).contains(&e) => e - 1,
            _ => return parse_err(line_no, format!("edge id `{id}` outside 1..{m}")),
        };
        let x = self
            .spec
            .parse_element(value)
            .or_else(|_| parse_err(line_no, format!("`{value}` is not an element of {}", self.spec)))?;
        if self.values[e].replace(x).is_some() {
            return parse_err(line_no, format!("edge {} assigned twice", e + 1));
        }
        Ok(())
    }

    fn finish(self, end_line: usize) -> Result<Vec<GroupElement>> {
        if let Some(e) = self.values.iter().position(Option::is_none) {
            let line = if end_line == 0 { self.start_line.max(1) } else { end_line };
            return parse_err(line, format!("edge {} has no value", e + 1));
        }
        Ok(self.values.into_iter().map(Option::unwrap).collect())
    }
}

pub fn parse_forbidden(text: &str, spec: &GroupSpec, m: usize) -> Result<ForbiddenAssignment> {
    let mut builder = AssignmentBuilder::new(spec, m, 1);
    let mut last = 0;
    for (idx, raw) in text.lines().enumerate() {
        last = idx + 1;
        let line = raw.trim();
        if !is_skipped(line) {
            builder.push(idx + 1, line)?;
        }
    }
    Ok(ForbiddenAssignment { spec: spec.clone(), values: builder.finish(last)? })
}

fn write_assignment(out: &mut String, values: &[GroupElement]) {
    for (e, v) in values.iter().enumerate() {
        writeln!(out, "{} {v}", e + 1).unwrap();
    }
}

pub fn write_forbidden(f: &ForbiddenAssignment) -> String {
    let mut out = String::new();
    write_assignment(&mut out, &f.values);
    out
}

pub fn parse_flows(text: &str, spec: &GroupSpec, m: usize) -> Result<Vec<GroupFlow>> {
    let mut flows = Vec::new();
    let mut current: Option<(AssignmentBuilder, usize)> = None;
    let mut last = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last = line_no;
        let line = raw.trim();
        if is_skipped(line) {
            continue;
        }
        if let Some(rest) = line.strip_prefix("flow") {
            let expected = flows.len() + usize::from(current.is_some()) + 1;
            match rest.trim().parse::<usize>() {
                Ok(i) if i == expected => {}
                _ => return parse_err(line_no, format!("expected `flow {expected}`")),
            }
            if let Some((b, _)) = current.take() {
                flows.push(GroupFlow { spec: spec.clone(), values: b.finish(line_no)? });
            }
            current = Some((AssignmentBuilder::new(spec, m, line_no), line_no));
            continue;
        }
        match current.as_mut() {
            Some((b, _)) => b.push(line_no, line)?,
            None => return parse_err(line_no, "value line before the first `flow` header"),
        }
    }
    if let Some((b, _)) = current {
        flows.push(GroupFlow { spec: spec.clone(), values: b.finish(last)? });
    }
    Ok(flows)
}

pub fn write_flows(flows: &[GroupFlow]) -> String {
    let mut out = String::new();
    for (i, phi) in flows.iter().enumerate() {
        writeln!(out, "flow {}", i + 1).unwrap();
        write_assignment(&mut out, &phi.values);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forbidden_round_trip() {
        let spec = GroupSpec::parse("Z2xZ3").unwrap();
        let f = parse_forbidden("c comment\n2 1,2\n1 0,0\n3 1,0\n", &spec, 3).unwrap();
        assert_eq!(f.values[1].residues(), &[1, 2]);
        assert_eq!(parse_forbidden(&write_forbidden(&f), &spec, 3).unwrap(), f);
    }

    #[test]
    fn forbidden_errors() {
        let spec = GroupSpec::cyclic(6);
        for (text, line) in [("1 0\n1 1\n", 2), ("1 0\n", 1), ("4 0\n", 1), ("1 6\n", 1), ("1\n", 1)] {
            match parse_forbidden(text, &spec, 2) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn flows_round_trip() {
        let spec = GroupSpec::cyclic(6);
        let flows = vec![
            GroupFlow { spec: spec.clone(), values: vec![spec.decode(1), spec.decode(5)] },
            GroupFlow { spec: spec.clone(), values: vec![spec.decode(2), spec.decode(4)] },
        ];
        let text = write_flows(&flows);
        assert!(text.starts_with("flow 1\n1 1\n2 5\nflow 2\n"));
        assert_eq!(parse_flows(&text, &spec, 2).unwrap(), flows);
        assert!(parse_flows("flow 2\n1 1\n2 1\n", &spec, 2).is_err());
        assert!(parse_flows("1 1\n", &spec, 2).is_err());
        assert_eq!(parse_flows("", &spec, 2).unwrap(), vec![]);
    }
}
