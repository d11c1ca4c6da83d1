//! Sessions and the concurrent session map.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, RwLock};
use std::time::{Duration, Instant};

use chrono::{DateTime, Utc};
use serde::{Deserialize, Serialize};
use sglab_core::script::{
    evaluate_on, parse, parse_line, Command, ExperimentScript, RunError, RunReport,
};
use sglab_core::{BeamStack, StackError};

/// One undoable step and the stack before it.
#[derive(Clone, Debug)]
struct Entry {
    step: Step,
    before: BeamStack,
}

#[derive(Clone, Debug, PartialEq)]
enum Step {
    /// A single command applied to the current stack.
    Command(Command),
    /// A script run from an empty stack, replacing the current one.
    Script(ExperimentScript),
}

#[derive(Debug)]
pub struct Session {
    pub id: String,
    pub created_at: DateTime<Utc>,
    stack: BeamStack,
    history: Vec<Entry>,
    last_used: Instant,
}

impl Session {
    fn new(id: String) -> Self {
        Session {
            id,
            created_at: Utc::now(),
            stack: BeamStack::empty(),
            history: Vec::new(),
            last_used: Instant::now(),
        }
    }

    pub fn stack(&self) -> &BeamStack {
        &self.stack
    }

    pub fn history_len(&self) -> usize {
        self.history.len()
    }

    /// Commands that rebuild the current stack from scratch, oldest first.
    pub fn commands(&self) -> Vec<Command> {
        let mut out = Vec::new();
        for entry in &self.history {
            match &entry.step {
                Step::Command(c) => out.push(*c),
                Step::Script(s) => out = s.commands.clone(),
            }
        }
        out
    }

    fn touch(&mut self) {
        self.last_used = Instant::now();
    }

    pub fn apply(&mut self, command: Command) -> Result<&BeamStack, StackError> {
        self.touch();
        let next = command.apply(&self.stack)?;
        let before = std::mem::replace(&mut self.stack, next);
        self.history.push(Entry {
            step: Step::Command(command),
            before,
        });
        Ok(&self.stack)
    }

    /// Run a script from an empty stack, exactly as a local evaluation
    /// would, and make its final stack the session's. This is one undoable
    /// step; on error the session is unchanged.
    pub fn run(&mut self, script: &ExperimentScript) -> Result<RunReport, RunError> {
        self.touch();
        let (next, report) = evaluate_on(&BeamStack::empty(), script)?;
        let before = std::mem::replace(&mut self.stack, next);
        self.history.push(Entry {
            step: Step::Script(script.clone()),
            before,
        });
        Ok(report)
    }

    pub fn undo(&mut self) -> Option<&BeamStack> {
        self.touch();
        let entry = self.history.pop()?;
        self.stack = entry.before;
        Some(&self.stack)
    }

    pub fn view(&mut self) -> &BeamStack {
        self.touch();
        &self.stack
    }
}

/// Concurrent map from session id to an individually locked session.
#[derive(Debug)]
pub struct SessionStore {
    sessions: RwLock<HashMap<String, Arc<Mutex<Session>>>>,
    ttl: Duration,
}

impl SessionStore {
    pub fn new(ttl: Duration) -> Self {
        SessionStore {
            sessions: RwLock::new(HashMap::new()),
            ttl,
        }
    }

    pub fn create(&self) -> String {
        let id = uuid::Uuid::new_v4().simple().to_string();
        let session = Arc::new(Mutex::new(Session::new(id.clone())));
        self.sessions.write().unwrap().insert(id.clone(), session);
        id
    }

    /// Look up a live session. Sessions idle past the TTL count as gone.
    pub fn get(&self, id: &str) -> Option<Arc<Mutex<Session>>> {
        let session = self.sessions.read().unwrap().get(id).cloned()?;
        let expired = session.lock().unwrap().last_used.elapsed() > self.ttl;
        if expired {
            self.sessions.write().unwrap().remove(id);
            return None;
        }
        Some(session)
    }

    pub fn len(&self) -> usize {
        self.sessions.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Drop sessions idle for longer than the TTL; returns how many went.
    pub fn sweep(&self) -> usize {
        let mut map = self.sessions.write().unwrap();
        let before = map.len();
        map.retain(|_, s| s.lock().unwrap().last_used.elapsed() <= self.ttl);
        before - map.len()
    }

    pub fn snapshot(&self) -> Snapshot {
        let map = self.sessions.read().unwrap();
        let mut sessions: Vec<SessionRecord> = map
            .values()
            .map(|s| {
                let s = s.lock().unwrap();
                SessionRecord {
                    id: s.id.clone(),
                    created_at: s.created_at,
                    history: s
                        .history
                        .iter()
                        .map(|e| StepRecord::from(&e.step))
                        .collect(),
                }
            })
            .collect();
        sessions.sort_by(|a, b| a.id.cmp(&b.id));
        Snapshot { sessions }
    }

    /// Rebuild sessions by replaying their recorded histories.
    pub fn restore(&self, snapshot: &Snapshot) -> Result<usize, String> {
        let mut restored = Vec::with_capacity(snapshot.sessions.len());
        for record in &snapshot.sessions {
            let mut session = Session::new(record.id.clone());
            session.created_at = record.created_at;
            let fail = |e: &dyn std::fmt::Display| format!("session {}: {e}", record.id);
            for step in &record.history {
                match step {
                    StepRecord::Command(text) => {
                        let command = match parse_line(text, 1).map_err(|e| fail(&e))?.as_slice() {
                            [(c, _)] => *c,
                            _ => return Err(fail(&format!("expected one command, got `{text}`"))),
                        };
                        session.apply(command).map_err(|e| fail(&e))?;
                    }
                    StepRecord::Script(text) => {
                        let script = parse(text).map_err(|e| fail(&e))?;
                        session.run(&script).map_err(|e| fail(&e))?;
                    }
                }
            }
            restored.push(session);
        }
        let count = restored.len();
        let mut map = self.sessions.write().unwrap();
        for session in restored {
            map.insert(session.id.clone(), Arc::new(Mutex::new(session)));
        }
        Ok(count)
    }
}

/// On-disk form of the store: each session's undo history as text, replayed
/// on load.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Snapshot {
    pub sessions: Vec<SessionRecord>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SessionRecord {
    pub id: String,
    pub created_at: DateTime<Utc>,
    pub history: Vec<StepRecord>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StepRecord {
    Command(String),
    Script(String),
}

impl From<&Step> for StepRecord {
    fn from(step: &Step) -> Self {
        match step {
            Step::Command(c) => StepRecord::Command(c.to_string()),
            Step::Script(s) => StepRecord::Script(s.render()),
        }
    }
}
