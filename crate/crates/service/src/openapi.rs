use serde_json::{json, Value};

/// OpenAPI 3.0 description served at `GET /spec`.
pub fn document() -> Value {
    let id_param = json!([{
        "name": "id", "in": "path", "required": true, "schema": { "type": "string" }
    }]);
    let error = |description: &str| {
        json!({
            "description": description,
            "content": { "application/json": { "schema": { "$ref": "#/components/schemas/Error" } } }
        })
    };
    let stack = json!({
        "description": "Stack after the request, bottom beam first",
        "content": { "application/json": { "schema": { "$ref": "#/components/schemas/StackView" } } }
    });
    json!({
        "openapi": "3.0.3",
        "info": {
            "title": "Stern-Gerlach laboratory sessions",
            "version": env!("CARGO_PKG_VERSION")
        },
        "paths": {
            "/healthz": {
                "get": { "responses": { "200": {
                    "description": "Service is up",
                    "content": { "text/plain": { "schema": { "type": "string", "example": "ok" } } }
                } } }
            },
            "/sessions": {
                "post": {
                    "summary": "Create a session with an empty stack",
                    "responses": { "200": {
                        "description": "New session",
                        "content": { "application/json": { "schema": {
                            "type": "object", "required": ["id"],
                            "properties": { "id": { "type": "string" } }
                        } } }
                    } }
                }
            },
            "/sessions/{id}": {
                "get": {
                    "summary": "Current stack of a session",
                    "parameters": id_param,
                    "responses": { "200": stack, "404": error("No such session") }
                }
            },
            "/sessions/{id}/commands": {
                "post": {
                    "summary": "Apply one command",
                    "parameters": id_param,
                    "requestBody": { "required": true, "content": { "application/json": {
                        "schema": { "$ref": "#/components/schemas/Command" }
                    } } },
                    "responses": {
                        "200": stack,
                        "400": error("Malformed command"),
                        "404": error("No such session"),
                        "409": error("Command not possible on the current stack")
                    }
                }
            },
            "/sessions/{id}/undo": {
                "post": {
                    "summary": "Undo the last command or script",
                    "parameters": id_param,
                    "responses": {
                        "200": stack,
                        "404": error("No such session"),
                        "409": error("Nothing to undo")
                    }
                }
            },
            "/sessions/{id}/script": {
                "post": {
                    "summary": "Run an experiment script on the current stack",
                    "parameters": id_param,
                    "requestBody": { "required": true, "content": { "text/plain": {
                        "schema": { "type": "string" }
                    } } },
                    "responses": {
                        "200": {
                            "description": "Stack after every step",
                            "content": { "application/json": { "schema": { "$ref": "#/components/schemas/RunReport" } } }
                        },
                        "400": error("Script does not parse"),
                        "404": error("No such session"),
                        "409": error("A command failed; the session is unchanged")
                    }
                }
            }
        },
        "components": { "schemas": {
            "Error": {
                "type": "object", "required": ["error", "code"],
                "properties": {
                    "error": { "type": "string" },
                    "code": {
                        "type": "string",
                        "enum": ["bad-command", "parse-error", "no-session", "no-beam",
                                 "need-two-beams", "nothing-to-undo", "not-found"]
                    }
                }
            },
            "Beam": {
                "type": "object", "required": ["intensity"],
                "properties": { "intensity": { "type": "number", "format": "double" } }
            },
            "StackView": {
                "type": "object", "required": ["beams"],
                "properties": { "beams": { "type": "array", "items": { "$ref": "#/components/schemas/Beam" } } }
            },
            "Command": {
                "type": "object", "required": ["kind"],
                "properties": {
                    "kind": { "type": "string", "enum": ["source", "split", "filter", "recombine", "bfield", "drop", "flip", "show"] },
                    "axis": { "type": "string", "enum": ["x", "y", "z"] },
                    "theta": { "type": "number" },
                    "phi": { "type": "number" },
                    "omega": { "type": "number" },
                    "sign": { "type": "string", "enum": ["+", "-"] }
                }
            },
            "RunReport": {
                "type": "object", "required": ["steps", "final"],
                "properties": {
                    "name": { "type": "string" },
                    "steps": { "type": "array", "items": {
                        "type": "object",
                        "properties": {
                            "command": { "type": "string" },
                            "intensities": { "type": "array", "items": { "type": "number" } }
                        }
                    } },
                    "final": { "type": "array", "items": { "type": "number" } }
                }
            }
        } }
    })
}
